"""Exact and asymptotic enumeration of permutations with no long decreasing subsequence."""
from .asym import (
    ConvergenceRow,
    Deviation,
    convergence_table,
    energy_w,
    log_c,
    rect_asym,
    regev_asym,
    riemann_lhs,
    scaled_dim,
)
from .dims import dim_frobenius, dim_hook, dim_rectangle, log_dim
from .errors import (
    ContainmentError,
    DomainError,
    InexactDivisionError,
    LengthError,
    SampleError,
    ScaleError,
    SpecError,
)
from .mehta import Estimate, mehta_closed, omega_integral_mc, psi2_closed, regev_lemma_rhs
from .partitions import (
    Partition,
    Rectangle,
    complement,
    contains,
    enumerate_bounded,
    enumerate_in_rectangle,
    is_self_complementary,
)
from .rsk_oracle import count_avoiders_bruteforce, count_involutions, lds, lis, rsk_shape
from .sums import (
    LogReal,
    SumSpec,
    error_term,
    mixed_sum,
    rectangle_decomposition,
    s_beta,
    s_exact,
)

__version__ = "0.1.0"
