"""Binary cyclic codes from binary-weight classes of Z_{2^m - 1}."""

from .field import FieldSpec, make_field
from .bitpoly import BinaryPolynomial
from .znsets import DefiningSet, WeightClassSpec, weight_class_set, mod3_set, mod4_set
from .cycliccode import CyclicCode, BchCertificate, best_bch_certificate, verify_certificate
from .families import build_mod3_code, build_mod4_code, duadic_pair, s_class_counts

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "make_field", "BinaryPolynomial", "DefiningSet", "WeightClassSpec",
    "weight_class_set", "mod3_set", "mod4_set", "CyclicCode", "BchCertificate",
    "best_bch_certificate", "verify_certificate", "build_mod3_code", "build_mod4_code",
    "duadic_pair", "s_class_counts",
]
