"""Bit-frame primitives and hex interchange.

A bit frame is a one-dimensional ``uint8`` numpy array whose entries are 0 or 1.
Arrays returned from this module are marked read-only so they can be shared
between workers without copying.
"""
import numpy as np

PAYLOAD_BITS = 158

_HEX_DIGITS = "0123456789ABCDEF"


def as_bits(bits, length=None):
    """Validate ``bits`` and return it as a read-only ``uint8`` frame."""
    arr = np.asarray(bits)
    if arr.ndim != 1:
        raise ValueError(f"bit frame must be one-dimensional, got shape {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError("bit frame may only contain 0 and 1")
    arr = arr.astype(np.uint8)
    if length is not None and arr.size != length:
        raise ValueError(f"expected {length} bits, got {arr.size}")
    arr.flags.writeable = False
    return arr


def beacon_payload(bits):
    """Validate a beacon payload (exactly 158 opaque bits)."""
    return as_bits(bits, PAYLOAD_BITS)


def frame_from_hex(text, bit_len):
    """Unpack the first ``bit_len`` bits of a hex string, MSB-first per digit.

    >>> frame_from_hex("A0", 4).tolist()
    [1, 0, 1, 0]
    """
    text = text.strip()
    if not text:
        raise ValueError("hex string is empty")
    try:
        nibbles = [int(c, 16) for c in text]
    except ValueError:
        raise ValueError(f"invalid hex digit in {text!r}") from None
    if bit_len < 0 or bit_len > 4 * len(nibbles):
        raise ValueError(f"bit_len {bit_len} exceeds the {4 * len(nibbles)} bits available")
    packed = np.array(nibbles, dtype=np.uint8)
    unpacked = (packed[:, None] >> np.array([3, 2, 1, 0], dtype=np.uint8)) & 1
    return as_bits(unpacked.ravel()[:bit_len])


def frame_to_hex(frame):
    """Pack a bit frame into upper-case hex; the last nibble is zero-padded."""
    bits = as_bits(frame)
    pad = (-bits.size) % 4
    padded = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 4)
    values = padded @ np.array([8, 4, 2, 1])
    return "".join(_HEX_DIGITS[v] for v in values)
