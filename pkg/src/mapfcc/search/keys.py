import struct
from typing import Iterable, Tuple

ConfigKey = bytes


def config_key(positions: Iterable[int]) -> ConfigKey:
    """
    Canonical byte encoding of a placement: one big-endian unsigned 32 bit
    word per agent, in agent order.

    Keys compare in the same order as the position vectors they encode.
    """
    positions = tuple(positions)
    return struct.pack(f">{len(positions)}I", *positions)


def decode_key(key: ConfigKey) -> Tuple[int, ...]:
    return struct.unpack(f">{len(key) // 4}I", key)
