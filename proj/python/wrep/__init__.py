from ._wrep import (
    gen,
    verify,
    irreducible,
    equivalent,
    identify,
    search,
    witness,
    specialize,
    words_equal,
    normalize_word,
    relator_count,
    NotAnExtension,
    OutOfClassifiedRange,
    IndeterminateError,
    WrepError,
)

__all__ = [
    "gen",
    "verify",
    "irreducible",
    "equivalent",
    "identify",
    "search",
    "witness",
    "specialize",
    "words_equal",
    "normalize_word",
    "relator_count",
    "NotAnExtension",
    "OutOfClassifiedRange",
    "IndeterminateError",
    "WrepError",
]
