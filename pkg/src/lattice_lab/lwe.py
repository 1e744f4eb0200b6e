"""Deliberately breakable Regev-style LWE bit encryption, plus a
reduction-based key-recovery attack.

The scheme: secret s and matrix A are uniform mod q, errors are uniform in
[-eta, eta], and b = A*s + e mod q. Encryption of a bit masks it with a
random subset sum of the samples. The parameter rule m*eta < q/4 makes
every decryption deterministic (the accumulated noise stays strictly
inside the decision boundary), so round trips are correct with no
probabilistic tolerance.

The attack embeds the samples into the lattice

    { (w, t) in Z^m x Z : w = t*b + A*z (mod q) for some z }

whose shortest vector at these toy sizes is (+-e | +-1); the error part is
read off and the secret recovered by exact linear algebra mod q. Keys are
sized to be breakable on a desk, which is the point.
"""

import json
from dataclasses import dataclass
from typing import Optional

from .basis import Basis
from .errors import ParameterError
from .families import is_prime
from .linalg import centered_mod, row_lattice_basis, solve_mod_prime
from .rng import SplitMix64
from .solver import Budget, SvpResult, enumerate_svp

MAX_ATTACK_DIM = 32


@dataclass(frozen=True)
class LweParams:
    n: int = 8
    q: int = 257
    m: int = 32
    eta: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if self.m < 1:
            raise ParameterError(f"m must be >= 1, got {self.m}")
        if self.q < 3 or self.q % 2 == 0 or not is_prime(self.q):
            raise ParameterError(f"q must be an odd prime, got {self.q}")
        if self.eta < 0:
            raise ParameterError(f"eta must be >= 0, got {self.eta}")
        if 4 * self.m * self.eta >= self.q:
            raise ParameterError(
                f"m*eta < q/4 required for deterministic decryption "
                f"(m={self.m}, eta={self.eta}, q={self.q})"
            )


@dataclass(frozen=True)
class LwePublicKey:
    matrix: tuple[tuple[int, ...], ...]  # A, m x n
    public_b: tuple[int, ...]  # b = A*s + e mod q


@dataclass(frozen=True)
class LweKeyPair:
    params: LweParams
    secret: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    public_b: tuple[int, ...]
    error: tuple[int, ...]  # retained for test assertions only

    @property
    def public(self) -> LwePublicKey:
        return LwePublicKey(matrix=self.matrix, public_b=self.public_b)


@dataclass(frozen=True)
class LweCiphertext:
    c1: tuple[int, ...]
    c2: int


def lwe_keygen(params: LweParams, seed: int) -> LweKeyPair:
    """Draw s, A uniform mod q and e uniform in [-eta, eta]^m, deterministically
    from the seed. Draw order is s, then A row-major, then e."""
    n, q, m, eta = params.n, params.q, params.m, params.eta
    rng = SplitMix64(seed)
    s = tuple(rng.below(q) for _ in range(n))
    a = tuple(tuple(rng.below(q) for _ in range(n)) for _ in range(m))
    e = tuple(rng.below(2 * eta + 1) - eta for _ in range(m))
    b = tuple((sum(a[i][j] * s[j] for j in range(n)) + e[i]) % q for i in range(m))
    return LweKeyPair(params=params, secret=s, matrix=a, public_b=b, error=e)


def lwe_encrypt(params: LweParams, public: LwePublicKey, bit: int, seed: int) -> LweCiphertext:
    """c1 = A^T r, c2 = <b, r> + bit*floor(q/2) for a seeded r in {0,1}^m."""
    if bit not in (0, 1):
        raise ParameterError(f"bit must be 0 or 1, got {bit!r}")
    n, q, m = params.n, params.q, params.m
    rng = SplitMix64(seed)
    r = [rng.next_u64() & 1 for _ in range(m)]
    a, b = public.matrix, public.public_b
    c1 = tuple(sum(a[i][j] * r[i] for i in range(m)) % q for j in range(n))
    c2 = (sum(b[i] * r[i] for i in range(m)) + bit * (q // 2)) % q
    return LweCiphertext(c1=c1, c2=c2)


def lwe_decrypt(params: LweParams, secret, ct: LweCiphertext) -> int:
    """1 iff the noisy value sits closer to floor(q/2) than to 0, on
    centered residues. Exact under m*eta < q/4."""
    q = params.q
    d = (ct.c2 - sum(si * ci for si, ci in zip(secret, ct.c1))) % q
    dist0 = abs(centered_mod(d, q))
    dist1 = abs(centered_mod(d - q // 2, q))
    return 1 if dist1 < dist0 else 0


@dataclass(frozen=True)
class AttackResult:
    success: bool
    secret: Optional[tuple[int, ...]]
    error: Optional[tuple[int, ...]]
    candidate: tuple[int, ...]
    norm_sq: int
    nodes: int
    status: str

    def to_dict(self) -> dict:
        return {
            "success": self.success,
            "secret": list(self.secret) if self.secret is not None else None,
            "error": list(self.error) if self.error is not None else None,
            "candidate": list(self.candidate),
            "norm_sq": self.norm_sq,
            "nodes": self.nodes,
            "status": self.status,
        }


def embedding_basis(params: LweParams, public: LwePublicKey) -> Basis:
    """Basis of the (m+1)-dimensional embedding lattice, built from the
    m+n+1 natural generators: the n columns of A, the m modulus vectors
    q*e_i, and the embedded target row (b | 1) with embedding factor 1."""
    n, q, m = params.n, params.q, params.m
    a, b = public.matrix, public.public_b
    dim = m + 1
    generators = []
    for j in range(n):
        generators.append([a[i][j] for i in range(m)] + [0])
    for i in range(m):
        row = [0] * dim
        row[i] = q
        generators.append(row)
    generators.append(list(b) + [1])
    return Basis.from_rows(row_lattice_basis(generators, dim))


def lwe_embedding_attack(
    params: LweParams, public: LwePublicKey, budget: Budget | None = None
) -> AttackResult:
    """Key recovery from the public key alone.

    Reduces and enumerates the embedding lattice; if the shortest vector
    found has the shape (+-e | +-1) with ||e||_inf <= eta, solves
    A*s' = b - e' (mod q) exactly and verifies the congruence. Timeouts and
    wrong-shape vectors come back as success=False with the candidate
    attached.
    """
    if params.n + params.m + 1 > MAX_ATTACK_DIM:
        raise ParameterError(
            f"n+m+1 = {params.n + params.m + 1} exceeds the enumeration "
            f"feasibility bound {MAX_ATTACK_DIM}"
        )
    result = enumerate_svp(embedding_basis(params, public), budget or Budget())
    return _interpret_candidate(params, public, result)


def _interpret_candidate(
    params: LweParams, public: LwePublicKey, result: SvpResult
) -> AttackResult:
    q, m, eta = params.q, params.m, params.eta
    vec = result.vector
    t = vec[m]
    failed = AttackResult(
        success=False,
        secret=None,
        error=None,
        candidate=vec,
        norm_sq=result.norm_sq,
        nodes=result.nodes,
        status=result.status,
    )
    if result.status != "ok" or abs(t) != 1:
        return failed
    err = tuple(t * w for w in vec[:m])
    if any(abs(x) > eta for x in err):
        return failed
    rhs = [(bi - ei) % q for bi, ei in zip(public.public_b, err)]
    secret = solve_mod_prime([list(row) for row in public.matrix], rhs, q)
    if secret is None:
        return failed
    # soundness gate: the verifying congruence must hold exactly
    for i in range(m):
        lhs = (public.public_b[i] - sum(public.matrix[i][j] * secret[j] for j in range(params.n))) % q
        if lhs != err[i] % q:
            return failed
    return AttackResult(
        success=True,
        secret=tuple(secret),
        error=err,
        candidate=vec,
        norm_sq=result.norm_sq,
        nodes=result.nodes,
        status=result.status,
    )


# -- JSON serialization (decimal-string integers) ---------------------------


def keypair_to_json(kp: LweKeyPair) -> str:
    p = kp.params
    obj = {
        "n": str(p.n),
        "q": str(p.q),
        "m": str(p.m),
        "eta": str(p.eta),
        "A": [str(x) for row in kp.matrix for x in row],
        "b": [str(x) for x in kp.public_b],
        "s": [str(x) for x in kp.secret],
        "e": [str(x) for x in kp.error],
    }
    return json.dumps(obj, indent=2) + "\n"


def keypair_from_json(text: str) -> LweKeyPair:
    obj = json.loads(text)
    params = LweParams(n=int(obj["n"]), q=int(obj["q"]), m=int(obj["m"]), eta=int(obj["eta"]))
    flat = [int(x) for x in obj["A"]]
    if len(flat) != params.m * params.n:
        raise ParameterError(f"A must have m*n = {params.m * params.n} entries, got {len(flat)}")
    matrix = tuple(
        tuple(flat[i * params.n : (i + 1) * params.n]) for i in range(params.m)
    )
    return LweKeyPair(
        params=params,
        secret=tuple(int(x) for x in obj["s"]),
        matrix=matrix,
        public_b=tuple(int(x) for x in obj["b"]),
        error=tuple(int(x) for x in obj["e"]),
    )


def ciphertext_to_json(ct: LweCiphertext) -> str:
    obj = {"c1": [str(x) for x in ct.c1], "c2": str(ct.c2)}
    return json.dumps(obj, indent=2) + "\n"


def ciphertext_from_json(text: str) -> LweCiphertext:
    obj = json.loads(text)
    return LweCiphertext(c1=tuple(int(x) for x in obj["c1"]), c2=int(obj["c2"]))
