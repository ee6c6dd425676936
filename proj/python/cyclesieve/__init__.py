"""Exact cyclic-sieving and symmetric-function toolkit."""

from ._cyclesieve import (
    content,
    csp_content_class,
    descent_set,
    flex,
    flex_tuple,
    kw,
    lie,
    maj,
    maj_n,
    maj_tuple,
    rsk,
    rsk_shape,
    schocker,
    stembridge,
    verify,
    wreath,
    wreath_dim,
)

__all__ = [
    "content",
    "csp_content_class",
    "descent_set",
    "flex",
    "flex_tuple",
    "kw",
    "lie",
    "maj",
    "maj_n",
    "maj_tuple",
    "rsk",
    "rsk_shape",
    "schocker",
    "stembridge",
    "verify",
    "wreath",
    "wreath_dim",
]
