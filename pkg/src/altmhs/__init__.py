"""Alternating multiple harmonic sums, exactly and modulo prime powers."""
from .bernoulli import bernoulli_exact, bernoulli_mod_p, fermat_quotient
from .exact import (BigRational, RationalPoly, binom_exact, rational_padic_valuation,
                    rational_reduce_mod)
from .kernels import BACKEND as KERNEL_BACKEND
from .mhs import (Signature, mhs_exact, mhs_mod, naive_mhs, reversal_pair, stuffle_product,
                  twisted_power_sum)
from .modular import (PadicScaled, PrecisionError, Residue, batch_inverses, binom_mod,
                      central_binomial_stream, mod_inverse, mod_pow, padic_arith)
from .registry import get_check, registry_list
from .runner import CheckResult, run_check, run_suite

__version__ = "0.1.0"

__all__ = [
    "BigRational", "RationalPoly", "binom_exact", "rational_padic_valuation",
    "rational_reduce_mod", "Residue", "PadicScaled", "PrecisionError", "mod_inverse",
    "batch_inverses", "mod_pow", "padic_arith", "central_binomial_stream", "binom_mod",
    "Signature", "mhs_exact", "mhs_mod", "naive_mhs", "stuffle_product", "reversal_pair",
    "twisted_power_sum", "bernoulli_exact", "bernoulli_mod_p", "fermat_quotient",
    "registry_list", "get_check", "run_check", "run_suite", "CheckResult", "KERNEL_BACKEND",
]
