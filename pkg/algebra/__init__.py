from .exterior import (AlgebraSignature, ExteriorMonomial, AlgebraElement, multiply_monomials,
                       multiply_elements, basis_monomials, degree_basis, poincare_polynomial)
from .tensor import TensorElement, multiply_tensor, zero_divisor, bar_element, apply_multiplication_map
from .certificate import LowerBoundCertificate, lower_bound_certificate, certificate_length
from .cup_length import ZdclReport, zdcl_degree_one, zdcl_brute_force, search_zdcl, predicted_zdcl
