"""Exact-arithmetic equivariant cohomology of configuration spaces.

Subpackages cover: exact linear/polynomial algebra over Q (`exactalg`),
configuration-space cohomology rings (`confring`), classifying-space rings
and Weyl groups (`charclasses`), the odd- and even-dimensional equivariant
models (`equiodd`, `equieven`), filtered complexes with pages, decalage and
purity (`specseq`), verification suites (`verify`) and the CLI (`cli`).
"""

__version__ = "0.1.0"
