from src.channel.block_fading import (
    ChannelBlock,
    SubchannelFrame,
    apply_subchannel,
    apply_subchannel_batch,
    sample_channel,
    subchannel_frame,
)

__all__ = [
    'ChannelBlock',
    'SubchannelFrame',
    'apply_subchannel',
    'apply_subchannel_batch',
    'sample_channel',
    'subchannel_frame',
]
