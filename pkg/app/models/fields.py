"""
Finite fields GF(p^k) used throughout the toolkit.

Fields are galois FieldArray classes built from fixed irreducible
polynomials, so element encodings are reproducible: an element
a_0 + a_1 w + ... + a_{k-1} w^{k-1} is the integer sum(a_i * p^i).

Irreducible polynomials (coefficients listed from the constant term up):
    GF(4)  : 1 + w + w^2        GF(9)  : 1 + w^2
    GF(8)  : 1 + w + w^3        GF(27) : 1 + 2w + w^3
    GF(16) : 1 + w + w^4        GF(81) : 2 + w + w^4
    GF(32) : 1 + w^2 + w^5
    GF(64) : 1 + w + w^6
"""

from functools import lru_cache
from typing import Dict, Tuple

import galois
import numpy as np

from app.exceptions import DomainError

# Irreducible moduli keyed by (p, k), low-order coefficient first
_MODULI: Dict[Tuple[int, int], Tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
}


def split_order(q: int) -> Tuple[int, int]:
    """
    Split a field order into characteristic and extension degree.

    Args:
        q: Field order p^k

    Returns:
        Tuple (p, k)
    """
    if q < 2:
        raise DomainError(f"field order {q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise DomainError(f"field order {q} is not a prime power")
    return p, k


@lru_cache(maxsize=None)
def get_field(p: int, k: int = 1):
    """
    Return the galois FieldArray class for GF(p^k).

    Args:
        p: Characteristic (any prime when k = 1)
        k: Extension degree

    Returns:
        FieldArray subclass
    """
    if k == 1:
        if not galois.is_prime(p):
            raise DomainError(f"{p} is not prime")
        return galois.GF(p)
    if (p, k) not in _MODULI:
        raise DomainError(f"GF({p}^{k}) is not supported; supported extensions: "
                          f"{sorted(p ** k for p, k in _MODULI)}")
    base = galois.GF(p)
    modulus = galois.Poly(list(reversed(_MODULI[(p, k)])), field=base)
    return galois.GF(p ** k, irreducible_poly=modulus)


def field_of_order(q: int):
    """Return the FieldArray class of order q."""
    return get_field(*split_order(q))


def describe(field) -> dict:
    """JSON descriptor of a field: order, characteristic, degree and modulus."""
    p, k = field.characteristic, field.degree
    return {
        "order": int(field.order),
        "p": int(p),
        "k": int(k),
        "modulus": list(_MODULI[(p, k)]) if k > 1 else None,
    }


def from_descriptor(descriptor) -> type:
    """Inverse of describe(); also accepts a bare field order."""
    if isinstance(descriptor, int):
        return field_of_order(descriptor)
    return get_field(descriptor["p"], descriptor.get("k", 1))


def coerce(field, value):
    """
    Coerce an integer (read as n * 1) or a field element into the field.

    Args:
        field: FieldArray class
        value: int, numpy integer, or element of the same field

    Returns:
        Scalar FieldArray
    """
    if isinstance(value, galois.FieldArray):
        if type(value) is not field:
            raise DomainError(f"element of {type(value).name} used in {field.name}")
        return value
    return field(int(value) % field.characteristic)


def coerce_array(field, values) -> "galois.FieldArray":
    """Coerce an integer array (entries read as n * 1) into the field."""
    return field(np.asarray(values, dtype=np.int64) % field.characteristic)


def from_code(field, code: int):
    """Element with the given integer encoding sum(a_i * p^i)."""
    if not 0 <= code < field.order:
        raise DomainError(f"code {code} out of range for {field.name}")
    return field(code)


def from_coefficients(field, coeffs) -> "galois.FieldArray":
    """Element a_0 + a_1 w + ... from its coefficient vector (low order first)."""
    p = field.characteristic
    return from_code(field, sum((int(c) % p) * p ** i for i, c in enumerate(coeffs)))


def to_json_value(element):
    """Integer for prime fields, coefficient vector for extensions."""
    field = type(element)
    code = int(element)
    if field.degree == 1:
        return code
    p = field.characteristic
    return [(code // p ** i) % p for i in range(field.degree)]


def from_json_value(field, value):
    """Inverse of to_json_value()."""
    if isinstance(value, list):
        return from_coefficients(field, value)
    return from_code(field, int(value)) if field.degree > 1 else coerce(field, value)


def elements(field) -> "galois.FieldArray":
    """All elements of the field in encoding order."""
    return field.elements


def pth_root(c):
    """
    The unique r with r^p = c, computed as c^(p^(k-1)).

    Args:
        c: Element of a finite (hence perfect) field

    Returns:
        The p-th root of c
    """
    field = type(c)
    p, k = field.characteristic, field.degree
    return c ** (p ** (k - 1))


def lucas_binom(m: int, n: int, p: int) -> int:
    """
    Binomial coefficient binom(m, n) mod p by Lucas' theorem.

    Returns 0 when n > m.
    """
    if n < 0 or n > m:
        return 0
    result = 1
    while m or n:
        mi, ni = m % p, n % p
        if ni > mi:
            return 0
        # small digit binomial
        num = den = 1
        for i in range(ni):
            num = num * (mi - i) % p
            den = den * (i + 1) % p
        result = result * num * pow(den, -1, p) % p
        m //= p
        n //= p
    return result
