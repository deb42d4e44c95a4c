"""\
A Python API for the Galois theory of reciprocal (palindromic) integer
polynomials. This library provides methods for:

    1. Passing between a reciprocal polynomial f of degree 2n and its
       symmetrized polynomial g with f(x) = x^n g(x + 1/x)
    2. Exact resultants, discriminants, heights and splitting types mod p
    3. Working with the wreath product S_2 wr S_n and its subgroups that
       surject onto S_n
    4. Deciding whether the Galois group of f lies in one of those subgroups
    5. Exhaustive finite-field Fourier transforms of splitting-type sieves
    6. Running exact counting censuses over boxes of coefficients.

A command-line interface is installed as ``recipgalois``; see
``recipgalois --help``.
"""
from .__version__ import __version__, SCHEMA_VERSION
