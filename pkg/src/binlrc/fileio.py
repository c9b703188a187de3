"""Text formats: LRC1 matrices, code files and shard files."""

from __future__ import annotations

import hashlib
import struct
from pathlib import Path
from typing import Iterator, TextIO

from .gf2 import BitMatrix
from .lrc import LrcCode, LrcParams


class FormatError(ValueError):
    pass


def format_matrix(m: BitMatrix) -> str:
    """``LRC1 <rows> <cols>`` then one 0/1 line per row, newline-terminated."""
    lines = [f"LRC1 {m.nrows} {m.ncols}"]
    width = m.ncols
    for row in m.rows:
        lines.append(format(row, f"0{width}b")[::-1] if width else "")
    return "\n".join(lines) + "\n"


def _parse_matrix_lines(lines: Iterator[str]) -> BitMatrix:
    header = next(lines, None)
    if header is None:
        raise FormatError("missing LRC1 header")
    parts = header.split()
    if len(parts) != 3 or parts[0] != "LRC1":
        raise FormatError(f"bad LRC1 header: {header!r}")
    try:
        nrows, ncols = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise FormatError(f"bad LRC1 header: {header!r}") from exc
    rows = []
    for i in range(nrows):
        line = next(lines, None)
        if line is None:
            raise FormatError(f"expected {nrows} rows, got {i}")
        if len(line) != ncols or line.strip("01"):
            raise FormatError(f"row {i} is not {ncols} characters of 0/1")
        rows.append(int(line[::-1], 2) if ncols else 0)
    return BitMatrix(nrows, ncols, rows)


def parse_matrix(text: str) -> BitMatrix:
    lines = iter(text.splitlines())
    m = _parse_matrix_lines(lines)
    if any(line.strip() for line in lines):
        raise FormatError("trailing content after matrix")
    return m


def read_matrix(path: str | Path) -> BitMatrix:
    return parse_matrix(Path(path).read_text())


def parse_matrix_blocks(text: str) -> list[BitMatrix]:
    """Several LRC1 blocks separated by blank lines."""
    blocks, current = [], []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            blocks.append(parse_matrix("\n".join(current)))
            current = []
    if current:
        blocks.append(parse_matrix("\n".join(current)))
    return blocks


_HEADER_KEYS = ("b", "s", "t", "m", "r", "ell", "n", "k", "kind", "z", "generatorless")


def format_code(code: LrcCode) -> str:
    p = code.params
    values = {
        "b": p.b, "s": p.s, "t": p.t, "m": p.m, "r": p.r, "ell": p.ell,
        "n": p.n, "k": p.k, "kind": p.kind, "z": p.z, "generatorless": "true",
    }
    header = "".join(f"{key}={values[key]}\n" for key in _HEADER_KEYS)
    return header + "---\n" + format_matrix(code.H)


def parse_code(text: str) -> LrcCode:
    lines = iter(text.splitlines())
    values: dict[str, str] = {}
    for line in lines:
        if line == "---":
            break
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"bad header line {line!r}")
        values[key.strip()] = value.strip()
    else:
        raise FormatError("missing '---' separator")
    missing = [k for k in _HEADER_KEYS if k not in values]
    if missing:
        raise FormatError(f"missing header keys: {missing}")
    H = _parse_matrix_lines(lines)
    ints = {k: int(values[k]) for k in ("b", "s", "t", "m", "r", "ell", "n", "k", "z")}
    params = LrcParams(kind=values["kind"], **ints)
    if H.ncols != params.n:
        raise FormatError(f"header n={params.n} but H has {H.ncols} columns")
    if H.nrows < params.ell:
        raise FormatError("H has fewer rows than repair groups")
    return LrcCode.from_matrix(H, params.ell, params)


def write_code(code: LrcCode, path: str | Path) -> str:
    text = format_code(code)
    Path(path).write_text(text)
    return text


def read_code(path: str | Path) -> LrcCode:
    return parse_code(Path(path).read_text())


def code_digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


# Shard files: fixed binary header followed by one byte per stripe.
_SHARD_MAGIC = b"LRCS"
_SHARD_HEADER = struct.Struct("<4s32sQQII")  # magic, code sha256, stripes, length, position, n


def write_shard(path: str | Path, digest: str, stripes: int, length: int, pos: int, n: int, payload: bytes) -> None:
    head = _SHARD_HEADER.pack(_SHARD_MAGIC, bytes.fromhex(digest), stripes, length, pos, n)
    Path(path).write_bytes(head + payload)


def read_shard(path: str | Path) -> tuple[dict, bytes] | None:
    """Header fields and payload, or None if the shard is missing or truncated."""
    path = Path(path)
    if not path.exists():
        return None
    raw = path.read_bytes()
    if len(raw) < _SHARD_HEADER.size:
        return None
    magic, digest, stripes, length, pos, n = _SHARD_HEADER.unpack_from(raw)
    if magic != _SHARD_MAGIC:
        raise FormatError(f"{path} is not a shard file")
    payload = raw[_SHARD_HEADER.size :]
    if len(payload) != stripes:
        return None
    info = {"digest": digest.hex(), "stripes": stripes, "length": length, "pos": pos, "n": n}
    return info, payload


def shard_name(pos: int) -> str:
    return f"shard_{pos:05d}.bin"


def dump_lines(lines: list[str], out: TextIO) -> None:
    for line in lines:
        out.write(line + "\n")
