"""Imaginary quadratic fields whose discriminant and class number share a factor n.

Modules:

``arith``      exact integer number theory (CRT, Kronecker, factoring, roots mod p)
``klcert``     Karoubi-Lambre certificates (a, b, n)
``construct``  congruence-driven construction of certificates
``formclass``  class groups from binary quadratic forms (imaginary and narrow real)
``threesq``    sums of three squares and Hurwitz class numbers
``kernels``    numba kernels with numpy fallbacks
``cli``        the ``classforge`` command
"""

__version__ = "0.1.0"
