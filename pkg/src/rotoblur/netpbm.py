"""Binary PPM (P6) and PGM (P5) read/write, 8-bit maxval 255 only.

Import divides by 255; export quantizes with round-half-away-from-zero so
byte -> float -> byte is lossless.
"""
from __future__ import annotations

import numpy as np

from .blur import ImageBuffer
from .errors import MalformedImage

_WHITESPACE = b" \t\r\n"


def _read_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        if data[pos:pos + 1] == b"#":
            while pos < n and data[pos:pos + 1] != b"\n":
                pos += 1
        elif data[pos:pos + 1] in (b" ", b"\t", b"\r", b"\n"):
            pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos:pos + 1] not in (b" ", b"\t", b"\r", b"\n"):
        pos += 1
    if start == pos:
        raise MalformedImage("truncated header")
    return data[start:pos], pos


def decode(data: bytes) -> ImageBuffer:
    magic, pos = _read_token(data, 0)
    if magic == b"P5":
        channels = 1
    elif magic == b"P6":
        channels = 3
    else:
        raise MalformedImage(f"unsupported magic {magic!r}; need P5 or P6")
    fields = []
    for _ in range(3):
        token, pos = _read_token(data, pos)
        if not token.isdigit():
            raise MalformedImage(f"non-numeric header field {token!r}")
        fields.append(int(token))
    width, height, maxval = fields
    if maxval != 255:
        raise MalformedImage(f"only maxval 255 supported, got {maxval}")
    if pos >= len(data) or data[pos:pos + 1] not in (b" ", b"\t", b"\r", b"\n"):
        raise MalformedImage("missing whitespace after maxval")
    pos += 1
    expected = width * height * channels
    raster = data[pos:pos + expected]
    if len(raster) != expected:
        raise MalformedImage(f"raster has {len(raster)} bytes, expected {expected}")
    arr = np.frombuffer(raster, dtype=np.uint8).astype(np.float64) / 255.0
    arr = arr.reshape(height, width, channels)
    return ImageBuffer(width=width, height=height, channels=channels, data=arr)


def encode(img: ImageBuffer) -> bytes:
    magic = b"P5" if img.channels == 1 else b"P6"
    header = magic + b"\n%d %d\n255\n" % (img.width, img.height)
    quantized = np.floor(img.data * 255.0 + 0.5)
    quantized = np.clip(quantized, 0.0, 255.0).astype(np.uint8)
    return header + quantized.tobytes()


def read_image(path: str) -> ImageBuffer:
    with open(path, "rb") as fh:
        return decode(fh.read())


def write_image(path: str, img: ImageBuffer) -> None:
    with open(path, "wb") as fh:
        fh.write(encode(img))
