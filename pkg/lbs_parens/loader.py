import os
import sys
import time

import numpy as np
from typing import BinaryIO

from .config import MAX_INPUT_CHARS
from .core import DomainError, ParenError, first_foreign

_NEWLINE = 0x0A


class InputTooLarge(ParenError):
    def __init__(self, length: int, limit: int):
        self.length = length
        self.limit = limit
        super().__init__(f"input of {length} characters is over the limit of {limit}")


def decode_codes(codes: np.ndarray, max_chars: int = MAX_INPUT_CHARS) -> str:
    """Strip one trailing newline, check size and alphabet, decode."""
    if codes.size and codes[-1] == _NEWLINE:
        codes = codes[:-1]

    if codes.size > max_chars:
        raise InputTooLarge(int(codes.size), max_chars)

    pos = first_foreign(codes)
    if pos >= 0:
        raise DomainError(pos, chr(codes[pos]))

    return codes.tobytes().decode("ascii")


def read_stream(stream: BinaryIO, max_chars: int = MAX_INPUT_CHARS) -> str:
    return decode_codes(np.frombuffer(stream.read(), dtype=np.uint8), max_chars)


class ParenLoader():
    """Parenthesis input backed by a read-only memory map of the file."""

    def __init__(self, fname, max_chars: int = MAX_INPUT_CHARS):
        self.fname = fname
        self.max_chars = max_chars
        self.file_size = os.stat(fname).st_size

        # one byte of slack for the trailing newline
        if self.file_size > max_chars + 1:
            raise InputTooLarge(self.file_size, max_chars)

    def codes(self) -> np.ndarray:
        if not self.file_size:
            return np.zeros((0,), dtype=np.uint8)
        return np.memmap(self.fname, dtype='uint8', mode='r', shape=(self.file_size,))

    def read(self) -> str:
        return decode_codes(self.codes(), self.max_chars)


if __name__ == "__main__":
    loader = ParenLoader(sys.argv[1])

    start = time.time()
    text = loader.read()
    t = time.time() - start

    print(f"{len(text)} characters loaded in {t} s")
    print(f"{len(text) / max(t, 1e-9)} chars/s")
