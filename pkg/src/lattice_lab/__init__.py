"""lattice-lab: exact-arithmetic lattice reduction, SVP enumeration, a toy
LWE cryptosystem with a reduction-based attack, dimension-scaling
benchmarks, and interpretive security profiles."""

from .basis import Basis, GramSchmidtData, format_basis, gram_det_sq, gram_schmidt, parse_basis
from .bench import (
    BenchCase,
    BenchRecord,
    ThresholdReport,
    build_grid,
    find_threshold,
    read_csv,
    run_case,
    run_suite,
)
from .errors import (
    BasisParseError,
    GenerationError,
    LatticeLabError,
    ParameterError,
    RankDeficientError,
    UnknownSchemeError,
)
from .estimators import BKZReducer, LLLReducer, SvpSolver, check_basis
from .families import LatticeFamily, gen_basis
from .lwe import (
    AttackResult,
    LweCiphertext,
    LweKeyPair,
    LweParams,
    LwePublicKey,
    lwe_decrypt,
    lwe_embedding_attack,
    lwe_encrypt,
    lwe_keygen,
)
from .profiles import (
    SecurityProfile,
    builtin_registry,
    export_profiles,
    load_profiles,
    profile_of,
    validate_profile,
)
from .reduction import ReductionParams, ReductionReport, bkz, lll, size_reduce
from .rng import SplitMix64, splitmix64_next
from .solver import Budget, SvpResult, bruteforce_svp, enumerate_svp

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "GramSchmidtData",
    "format_basis",
    "parse_basis",
    "gram_schmidt",
    "gram_det_sq",
    "LatticeFamily",
    "gen_basis",
    "ReductionParams",
    "ReductionReport",
    "size_reduce",
    "lll",
    "bkz",
    "Budget",
    "SvpResult",
    "enumerate_svp",
    "bruteforce_svp",
    "LweParams",
    "LweKeyPair",
    "LwePublicKey",
    "LweCiphertext",
    "AttackResult",
    "lwe_keygen",
    "lwe_encrypt",
    "lwe_decrypt",
    "lwe_embedding_attack",
    "BenchCase",
    "BenchRecord",
    "ThresholdReport",
    "build_grid",
    "run_case",
    "run_suite",
    "read_csv",
    "find_threshold",
    "SecurityProfile",
    "builtin_registry",
    "profile_of",
    "validate_profile",
    "export_profiles",
    "load_profiles",
    "LLLReducer",
    "BKZReducer",
    "SvpSolver",
    "check_basis",
    "SplitMix64",
    "splitmix64_next",
    "LatticeLabError",
    "ParameterError",
    "RankDeficientError",
    "GenerationError",
    "BasisParseError",
    "UnknownSchemeError",
]
