"""Kernel selection: compiled extension if available, pure Python otherwise.

Set AF2_PURE=1 to force the pure-Python kernel (used by the benchmark and
by CI to exercise the fallback path).
"""

import os

if os.environ.get("AF2_PURE"):
    from af2 import _wordops as impl
else:
    try:
        from af2 import _speedups as impl  # type: ignore[no-redef]
    except ImportError:
        from af2 import _wordops as impl  # type: ignore[no-redef]

IMPL = impl.IMPL

reduce_word = impl.reduce_word
multiply = impl.multiply
invert = impl.invert
conjugate = impl.conjugate
power = impl.power
letter_length = impl.letter_length
letter_codes = impl.letter_codes
word_key = impl.word_key
canonical = impl.canonical
cyclic_reduce = impl.cyclic_reduce
nielsen_basis = impl.nielsen_basis
neighbor_words = impl.neighbor_words
