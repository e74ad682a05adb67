"""Low-level bit-vector helpers shared by the group-algebra and search code."""

from __future__ import annotations

_BYTE_POSITIONS = tuple(
    tuple(j for j in range(8) if b >> j & 1) for b in range(256)
)

_BYTE_REVERSED = tuple(int(f"{b:08b}"[::-1], 2) for b in range(256))


def bit_positions(bits: int) -> list[int]:
    """Indices of set bits, ascending. O(total bytes + set bits)."""
    out: list[int] = []
    nbytes = (bits.bit_length() + 7) >> 3
    for i, byte in enumerate(bits.to_bytes(nbytes, "little")):
        if byte:
            base = i << 3
            for j in _BYTE_POSITIONS[byte]:
                out.append(base + j)
    return out


def bits_from_positions(width: int, positions) -> int:
    """Pack an iterable of indices in [0, width) into an int bitmask."""
    buf = bytearray((width + 7) >> 3)
    for p in positions:
        buf[p >> 3] |= 1 << (p & 7)
    return int.from_bytes(buf, "little")


def reverse_mask(mask: int, width: int) -> int:
    """Mirror a mask within [0, width): bit i moves to bit width-1-i."""
    out = 0
    remaining = width
    while remaining >= 8:
        out = (out << 8) | _BYTE_REVERSED[mask & 0xFF]
        mask >>= 8
        remaining -= 8
    if remaining:
        out = (out << remaining) | (_BYTE_REVERSED[mask & 0xFF] >> (8 - remaining))
    return out


def iter_bits(mask: int):
    """Yield set-bit indices ascending; cheap for small masks."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb
