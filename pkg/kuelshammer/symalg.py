"""
Finite-dimensional symmetric algebras over F_{2^m} given by a product table.

A table lists structure constants b_i b_j = sum_k c_ijk b_k as sparse triples
and a functional lambda; the symmetrizing form is (a, b) = lambda(ab).

>>> from kuelshammer.group import Group
>>> kc2 = group_algebra_table(Group("cyclic", 2))
>>> kc2.validate().ok, kc2.gram_matrix().tolist()
(True, [[1, 0], [0, 1]])
"""
import functools
import json
import logging
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .algebra import CommutativeAlgebra, QuotientAlgebra
from .exceptions import ResourceLimit, TableParseError, ValidationFailure
from .ffield import FiniteField, field_create
from .finite_group import GroupABC
from .linalg2 import (
    SemilinearMap,
    Subspace,
    gram_rank,
    kernel_of_images,
    orthogonal_complement,
    pack,
    semilinear_kernel_chain,
    subspace_sum,
)
from .utilities import DEFAULT_SEED

logger = logging.getLogger("kuelshammer")


@dataclass
class Violation:
    kind: str
    witness: Tuple[int, ...]
    detail: str = ""


@dataclass
class ValidationReport:
    ok: bool
    violations: List[Violation] = field(default_factory=list)
    triples_checked: int = 0
    sampled: bool = False
    seed: int = DEFAULT_SEED
    socle_support: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def summary(self) -> str:
        if self.ok:
            mode = "sampled" if self.sampled else "exhaustive"
            return f"valid ({self.triples_checked} triples, {mode})"
        first = self.violations[0]
        return f"{len(self.violations)} violation(s); first: {first.kind} at {first.witness} {first.detail}".strip()


def _ragged_join(link: np.ndarray, start: np.ndarray, count: np.ndarray, order: np.ndarray):
    """Pair each outer entry t with every inner entry in order[start[link[t]]:...+count[link[t]]]."""
    rep = count[link]
    total = int(rep.sum())
    outer = np.repeat(np.arange(len(link)), rep)
    offsets = np.arange(total) - np.repeat(np.cumsum(rep) - rep, rep)
    inner = order[np.repeat(start[link], rep) + offsets]
    return outer, inner


def _xor_by_key(keys: np.ndarray, coeffs: np.ndarray):
    """Sum (xor) coefficients sharing a key; returns sorted unique keys and sums."""
    if not len(keys):
        return keys, coeffs
    order = np.argsort(keys, kind="stable")
    keys, coeffs = keys[order], coeffs[order]
    heads = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    return keys[heads], np.bitwise_xor.reduceat(coeffs, heads)


class AlgebraTable:
    """
    :param field: F_{2^m}.
    :param labels: Basis labels.
    :param unit: Coordinates of the identity.
    :param products: Triples (i, j, k, c); absent triples are zero, repeats add up.
    :param form: lambda as a coefficient vector.
    :param config: Overrides for GENERIC_GUARD, SWEEP_LIMIT, SAMPLE_TRIPLES
        and CHUNK_TERMS.
    """

    GENERIC_GUARD = 2000
    SWEEP_LIMIT = 200
    SAMPLE_TRIPLES = 100_000
    CHUNK_TERMS = 2_000_000

    def __init__(
        self,
        field: FiniteField,
        labels: Sequence[str],
        unit,
        products: Sequence[Sequence[int]],
        form,
        config: Optional[Dict[str, Any]] = None,
    ):
        if field.p != 2:
            raise ValueError("algebra tables live over F_{2^m}")
        self.config = config or {}
        self.field = field
        self.labels = list(labels)
        d = len(self.labels)
        guard = self.config.get("generic_guard", self.GENERIC_GUARD)
        if d > guard:
            raise ResourceLimit(f"algebra of dimension {d} exceeds the generic guard {guard}")
        self.unit = np.asarray(unit, dtype=np.int64).reshape(d)
        self.form = np.asarray(form, dtype=np.int64).reshape(d)
        triples = np.asarray(products, dtype=np.int64).reshape(-1, 4)
        if len(triples) and ((triples[:, :3] < 0).any() or (triples[:, :3] >= d).any()):
            raise ValueError("product triple index out of range")
        if len(triples) and ((triples[:, 3] < 0).any() or (triples[:, 3] >= field.order).any()):
            raise ValueError("product coefficient is not a field element code")
        self._pi, self._pj, self._pk, self._pc = self._normalize(triples, d)
        self.socle_support: List[str] = []
        self._report: Optional[ValidationReport] = None

    def _normalize(self, triples: np.ndarray, d: int):
        """Merge repeated (i, j, k), drop zeros, sort lexicographically."""
        if len(triples) == 0:
            empty = np.zeros(0, dtype=np.int64)
            return empty, empty, empty, empty
        keys = (triples[:, 0] * d + triples[:, 1]) * d + triples[:, 2]
        order = np.argsort(keys, kind="stable")
        keys, coeffs = keys[order], triples[order, 3]
        uniq, start = np.unique(keys, return_index=True)
        merged = np.bitwise_xor.reduceat(coeffs, start) if len(coeffs) else coeffs
        keep = merged != 0
        uniq, merged = uniq[keep], merged[keep]
        ij, k = np.divmod(uniq, d)
        i, j = np.divmod(ij, d)
        return i, j, k, merged

    # ------------------------------------------------------------ basics

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return self.field.k

    def __repr__(self) -> str:
        return f"AlgebraTable(dim={self.dim}, field={self.field}, products={len(self._pc)})"

    def products(self) -> List[Tuple[int, int, int, int]]:
        return list(zip(*(a.tolist() for a in (self._pi, self._pj, self._pk, self._pc))))

    def basis_vector(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    @functools.cached_property
    def is_monomial(self) -> bool:
        """Each basis product is zero or a multiple of a single basis vector."""
        pairs = self._pi * self.dim + self._pj
        return len(np.unique(pairs)) == len(pairs)

    @functools.cached_property
    def _mono(self) -> Tuple[np.ndarray, np.ndarray]:
        d = self.dim
        k = np.full((d, d), -1, dtype=np.int64)
        c = np.zeros((d, d), dtype=np.int64)
        k[self._pi, self._pj] = self._pk
        c[self._pi, self._pj] = self._pc
        return k, c

    @functools.cached_property
    def _by_pair(self) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
        out: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for i, j, k, c in self.products():
            out.setdefault((i, j), []).append((k, c))
        return out

    def basis_product(self, i: int, j: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        for k, c in self._by_pair.get((i, j), ()):
            v[k] ^= c
        return v

    def mul(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        F, d = self.field, self.dim
        u, v = np.asarray(u, dtype=np.int64), np.asarray(v, dtype=np.int64)
        iu, iv = np.flatnonzero(u), np.flatnonzero(v)
        out = np.zeros(d, dtype=np.int64)
        if len(iu) == 0 or len(iv) == 0:
            return out
        if self.is_monomial:
            mk, mc = self._mono
            I, J = np.meshgrid(iu, iv, indexing="ij")
            ks, cs = mk[I, J].ravel(), mc[I, J].ravel()
            coeff = F.mul_array(F.mul_array(u[I].ravel(), v[J].ravel()), cs)
            hit = ks >= 0
            np.bitwise_xor.at(out, ks[hit], coeff[hit])
            return out
        for i in iu:
            for j in iv:
                for k, c in self._by_pair.get((int(i), int(j)), ()):
                    out[k] ^= F.mul(F.mul(int(u[i]), int(v[j])), c)
        return out

    def commutator(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.mul(u, v) ^ self.mul(v, u)

    def lam(self, v: np.ndarray) -> int:
        vals = self.field.mul_array(self.form, np.asarray(v, dtype=np.int64))
        return int(np.bitwise_xor.reduce(vals)) if len(vals) else 0

    def gram_matrix(self) -> np.ndarray:
        """G_ij = lambda(b_i b_j)."""
        d = self.dim
        G = np.zeros((d, d), dtype=np.int64)
        if len(self._pc):
            np.bitwise_xor.at(G, (self._pi, self._pj), self.field.mul_array(self._pc, self.form[self._pk]))
        return G

    # -------------------------------------------------------- validation

    def _sampled_triples(self, seed: int) -> np.ndarray:
        samples = self.config.get("sample_triples", self.SAMPLE_TRIPLES)
        rng = np.random.default_rng(seed)
        return rng.integers(0, self.dim, size=(samples, 3))

    def _sweep_associativity(self, max_violations: int) -> List[Violation]:
        """
        All d^3 basis triples: (b_i b_j) b_k + b_i (b_j b_k) accumulated
        coefficient-wise from pairs of nonzero structure constants.

        For each i the j range is cut into chunks of about CHUNK_TERMS
        contributions; a single j is never split.
        """
        F, d = self.field, self.dim
        pi, pj, pk = self._pi, self._pj, self._pk
        budget = self.config.get("chunk_terms", self.CHUNK_TERMS)
        # products are sorted by (i, j, k)
        first_start = np.searchsorted(pi, np.arange(d + 1))
        first_count = np.diff(first_start)
        by_first = np.arange(len(pi))
        violations: List[Violation] = []

        for i in range(d):
            own = by_first[first_start[i]:first_start[i + 1]]
            # right-hand inner factors b_i b_l, grouped by l
            by_second = own[np.argsort(pj[own], kind="stable")]
            second_start = np.searchsorted(pj[by_second], np.arange(d + 1))
            second_count = np.diff(second_start)

            cost = np.bincount(pj[own], weights=first_count[pk[own]], minlength=d)
            cost += np.bincount(pi, weights=second_count[pk], minlength=d)
            j0 = 0
            while j0 < d:
                j1 = j0 + 1
                total = cost[j0]
                while j1 < d and total + cost[j1] <= budget:
                    total += cost[j1]
                    j1 += 1
                keys, coeffs = self._triple_terms(
                    own, j0, j1, first_start, first_count, by_first, by_second, second_start, second_count
                )
                j0 = j1
                if not len(keys):
                    continue
                keys, coeffs = _xor_by_key(keys, coeffs)
                nonzero = coeffs != 0
                jk = np.unique(keys[nonzero] // d)
                for t in jk[:max_violations]:
                    violations.append(Violation("associativity", (i, *(int(x) for x in divmod(int(t), d)))))
                lam_keys, lam = _xor_by_key(keys // d, F.mul_array(coeffs, self.form[keys % d]))
                for t in lam_keys[lam != 0][:max_violations]:
                    violations.append(Violation("form_associativity", (i, *(int(x) for x in divmod(int(t), d)))))
                if len(violations) >= max_violations:
                    return violations
        return violations

    def _triple_terms(self, own, j0, j1, first_start, first_count, by_first, by_second, second_start, second_count):
        """Keys (j d + k) d + n and coefficients of both bracketings for j in [j0, j1)."""
        F, d = self.field, self.dim
        pi, pj, pk, pc = self._pi, self._pj, self._pk, self._pc

        # (b_i b_j) b_k: outer c_ijl, inner c_lkn
        left = own[(pj[own] >= j0) & (pj[own] < j1)]
        outer, inner = _ragged_join(pk[left], first_start, first_count, by_first)
        left_keys = (pj[left][outer] * d + pj[inner]) * d + pk[inner]
        left_coeffs = F.mul_array(pc[left][outer], pc[inner])

        # b_i (b_j b_k): outer c_jkl, inner c_iln
        right = by_first[first_start[j0]:first_start[j1]]
        outer, inner = _ragged_join(pk[right], second_start, second_count, by_second)
        right_keys = (pi[right][outer] * d + pj[right][outer]) * d + pk[inner]
        right_coeffs = F.mul_array(pc[right][outer], pc[inner])

        return np.concatenate([left_keys, right_keys]), np.concatenate([left_coeffs, right_coeffs])

    def _monomial_triple_products(self, triples: np.ndarray):
        """(left_k, left_c, right_k, right_c) for (b_i b_j) b_k and b_i (b_j b_k)."""
        F, d = self.field, self.dim
        mk, mc = self._mono
        # sink index d absorbs zero products
        K = np.full((d + 1, d + 1), d, dtype=np.int64)
        C = np.zeros((d + 1, d + 1), dtype=np.int64)
        K[:d, :d] = np.where(mk >= 0, mk, d)
        C[:d, :d] = mc
        i, j, k = triples.T
        ij = K[i, j]
        left_k = K[ij, k]
        left_c = F.mul_array(C[i, j], C[ij, k])
        jk = K[j, k]
        right_k = K[i, jk]
        right_c = F.mul_array(C[j, k], C[i, jk])
        return left_k, left_c, right_k, right_c

    def _sampled_associativity(self, triples: np.ndarray, max_violations: int) -> List[Violation]:
        F = self.field
        violations: List[Violation] = []
        if self.is_monomial:
            form_pad = np.append(self.form, 0)
            for start in range(0, len(triples), 1_000_000):
                chunk = triples[start:start + 1_000_000]
                lk, lc, rk, rc = self._monomial_triple_products(chunk)
                bad = ~((lc == rc) & ((lc == 0) | (lk == rk)))
                for t in chunk[bad][:max_violations]:
                    violations.append(Violation("associativity", tuple(int(x) for x in t)))
                lam_left = F.mul_array(lc, form_pad[lk])
                lam_right = F.mul_array(rc, form_pad[rk])
                for t in chunk[lam_left != lam_right][:max_violations]:
                    violations.append(Violation("form_associativity", tuple(int(x) for x in t)))
            return violations

        products = {}

        def prod(i, j):
            key = (i, j)
            if key not in products:
                products[key] = self.basis_product(i, j)
            return products[key]

        for i, j, k in triples.tolist():
            left = self.mul(prod(i, j), self.basis_vector(k))
            right = self.mul(self.basis_vector(i), prod(j, k))
            if not np.array_equal(left, right):
                violations.append(Violation("associativity", (i, j, k)))
            if self.lam(left) != self.lam(right):
                violations.append(Violation("form_associativity", (i, j, k)))
            if len(violations) >= max_violations:
                break
        return violations

    def validate(self, seed: int = DEFAULT_SEED, max_violations: int = 20) -> ValidationReport:
        d = self.dim
        F = self.field
        violations: List[Violation] = []

        for i in range(d):
            e = self.basis_vector(i)
            if not np.array_equal(self.mul(self.unit, e), e) or not np.array_equal(self.mul(e, self.unit), e):
                violations.append(Violation("unit", (i,), f"unit law fails on {self.labels[i]}"))
                break

        sweep = self.config.get("sweep_limit", self.SWEEP_LIMIT)
        sampled = d > sweep
        if not sampled:
            violations.extend(self._sweep_associativity(max_violations))
            triples_checked = d**3
        else:
            triples = self._sampled_triples(seed)
            triples_checked = len(triples)
            warnings.warn(f"associativity checked on {len(triples)} sampled triples only (seed {seed})")
            logger.info("sampled associativity check, seed %d", seed)
            violations.extend(self._sampled_associativity(triples, max_violations))

        G = self.gram_matrix()
        asym = np.argwhere(G != G.T)
        if len(asym):
            i, j = (int(x) for x in asym[0])
            violations.append(Violation("form_symmetry", (i, j), "lambda(b_i b_j) != lambda(b_j b_i)"))
        rank = gram_rank(F, G) if d else 0
        if rank != d:
            violations.append(Violation("nondegeneracy", (rank, d), f"Gram matrix has rank {rank} < {d}"))

        report = ValidationReport(
            ok=not violations,
            violations=violations,
            triples_checked=int(triples_checked),
            sampled=sampled,
            seed=seed,
            socle_support=list(self.socle_support),
        )
        self._report = report
        return report

    def require_valid(self, seed: int = DEFAULT_SEED) -> ValidationReport:
        report = self.validate(seed)
        if not report.ok:
            raise ValidationFailure(f"invalid algebra table: {report.summary()}", report)
        return report

    # --------------------------------------------- Kuelshammer spaces

    def _commutator_block(self, j: int) -> np.ndarray:
        """Concatenation over i of [b_j, b_i]."""
        d = self.dim
        if not self.is_monomial:
            ej = self.basis_vector(j)
            return np.concatenate([self.commutator(ej, self.basis_vector(i)) for i in range(d)])
        mk, mc = self._mono
        block = np.zeros(d * d, dtype=np.int64)
        rows = np.arange(d) * d
        for k, c in ((mk[j, :], mc[j, :]), (mk[:, j], mc[:, j])):
            hit = k >= 0
            np.bitwise_xor.at(block, rows[hit] + k[hit], c[hit])
        return block

    @functools.lru_cache(maxsize=None)
    def commutator_space(self) -> Subspace:
        """K(A) = span of [b_i, b_j]."""
        d, F = self.dim, self.field
        if self.is_monomial and self.m == 1:
            mk, _ = self._mono
            rows = []
            for i in range(d):
                for j in range(i + 1, d):
                    a, b = int(mk[i, j]), int(mk[j, i])
                    r = (1 << a if a >= 0 else 0) ^ (1 << b if b >= 0 else 0)
                    if r:
                        rows.append(r)
            return Subspace(F, d, rows)
        vectors = [
            self.commutator(self.basis_vector(i), self.basis_vector(j))
            for i in range(d)
            for j in range(i + 1, d)
        ]
        return Subspace.from_vectors(F, d, vectors)

    @functools.lru_cache(maxsize=None)
    def center(self) -> Subspace:
        """Solutions of [x, b_i] = 0, checked against K(A)^perp."""
        d, F, m = self.dim, self.field, self.m
        images = []
        for j in range(d):
            block = self._commutator_block(j)
            for t in range(m):
                images.append(pack(F.mul_array(1 << t, block), m))
        z1 = Subspace(F, d, kernel_of_images(images))
        z2 = orthogonal_complement(self.commutator_space(), self.gram_matrix())
        if z1 != z2:
            raise ValidationFailure("the centralizer of the basis differs from K(A)^perp")
        return z1

    @functools.cached_property
    def _squaring_chain(self) -> Tuple[List[int], List[Subspace]]:
        """Coordinates off the pivots of K(A) and the kernel chain of x -> x^2 on A/K(A)."""
        K = self.commutator_space()
        m = self.m
        pivot_coords = {p // m for p in K.pivots}
        free = [i for i in range(self.dim) if i not in pivot_coords]
        columns = tuple(
            K.reduce(self.mul(self.basis_vector(c), self.basis_vector(c)))[free] for c in free
        )
        mu = SemilinearMap(self.field, len(free), columns, frobenius=1)
        return free, semilinear_kernel_chain(mu)

    def tn_space(self, n: int) -> Subspace:
        """T_n(A) = {x : x^(2^n) in K(A)}."""
        if n < 0:
            raise ValueError("depth n must be non-negative")
        K = self.commutator_space()
        if n == 0:
            return K
        free, chain = self._squaring_chain
        kernel = chain[min(n, len(chain)) - 1]
        lifted = []
        for v in kernel.basis():
            x = np.zeros(self.dim, dtype=np.int64)
            x[free] = v
            lifted.append(x)
        return subspace_sum(K, Subspace.from_vectors(self.field, self.dim, lifted))

    def tn_perp(self, n: int) -> Subspace:
        return orthogonal_complement(self.tn_space(n), self.gram_matrix())

    # ------------------------------------------------ derived algebras

    @functools.cached_property
    def _center_basis(self) -> List[np.ndarray]:
        return self.center().basis()

    def center_algebra(self) -> CommutativeAlgebra:
        Z = self.center()
        basis = self._center_basis
        r = len(basis)
        C = np.zeros((r, r, r), dtype=np.int64)
        for a in range(r):
            for b in range(a, r):
                C[a, b] = C[b, a] = Z.coordinates(self.mul(basis[a], basis[b]))
        labels = [f"z{a}" for a in range(r)]
        return CommutativeAlgebra(self.field, C, Z.coordinates(self.unit), labels, name="Z(A)")

    def center_coordinates(self, sub: Subspace) -> Subspace:
        """A subspace of Z(A) in the coordinates of center_algebra()."""
        Z = self.center()
        return Subspace.from_vectors(self.field, Z.dim, [Z.coordinates(v) for v in sub.basis()])

    def zbar_algebra(self, n: int = 1) -> QuotientAlgebra:
        z = self.center_algebra()
        return QuotientAlgebra(z, self.center_coordinates(self.tn_perp(n)))

    # ------------------------------------------------------- file format

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field": {"p": 2, "m": self.m},
            "dim": self.dim,
            "labels": list(self.labels),
            "unit": self.unit.tolist(),
            "products": [list(t) for t in self.products()],
            "form_functional": self.form.tolist(),
        }

    @classmethod
    def from_dict(cls, doc: Dict[str, Any], config: Optional[Dict[str, Any]] = None) -> "AlgebraTable":
        try:
            fld = doc["field"]
            if int(fld["p"]) != 2:
                raise TableParseError(f"field characteristic {fld['p']} is not 2")
            m = int(fld["m"])
            dim = int(doc["dim"])
            labels = doc.get("labels") or [f"b{i}" for i in range(dim)]
            unit = [int(x) for x in doc["unit"]]
            products = [[int(x) for x in t] for t in doc["products"]]
            form = [int(x) for x in doc["form_functional"]]
        except TableParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise TableParseError(f"malformed algebra table: {exc!r}") from None
        if m < 1 or dim < 0:
            raise TableParseError("field degree and dimension must be positive")
        if len(labels) != dim or len(unit) != dim or len(form) != dim:
            raise TableParseError("labels, unit and form_functional must have length dim")
        if any(len(t) != 4 for t in products):
            raise TableParseError("every product entry must be [i, j, k, coefficient]")
        try:
            return cls(field_create(2, m), labels, unit, products, form, config)
        except ValueError as exc:
            raise TableParseError(str(exc)) from None

    def to_file(self, path: Union[str, Path]) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=1), encoding="utf-8")

    @classmethod
    def from_file(cls, path: Union[str, Path], config: Optional[Dict[str, Any]] = None) -> "AlgebraTable":
        try:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise TableParseError(f"cannot read algebra table {path}: {exc}") from None
        if not isinstance(doc, dict):
            raise TableParseError("algebra table document must be a JSON object")
        return cls.from_dict(doc, config)


# ---------------------------------------------------------------- builders


def validate(a: AlgebraTable, seed: int = DEFAULT_SEED) -> ValidationReport:
    return a.validate(seed)


def commutator_space(a: AlgebraTable) -> Subspace:
    return a.commutator_space()


def tn_space(a: AlgebraTable, n: int) -> Subspace:
    return a.tn_space(n)


def tn_perp(a: AlgebraTable, n: int) -> Subspace:
    return a.tn_perp(n)


def center(a: AlgebraTable) -> Subspace:
    return a.center()


def group_algebra_table(g: GroupABC, config: Optional[Dict[str, Any]] = None) -> AlgebraTable:
    """kG with lambda the indicator of the identity."""
    guard = (config or {}).get("generic_guard", AlgebraTable.GENERIC_GUARD)
    if g.order > guard:
        raise ResourceLimit(f"group of order {g.order} exceeds the generic guard {guard}")
    n = g.order
    I, J = (x.ravel() for x in np.meshgrid(np.arange(n), np.arange(n), indexing="ij"))
    K = g.multiply(I, J)
    products = np.stack([I, J, K, np.ones_like(I)], axis=1)
    unit = np.zeros(n, dtype=np.int64)
    unit[g.identity] = 1
    labels = [g.describe(x) for x in range(n)]
    return AlgebraTable(field_create(2, 1), labels, unit, products, unit.copy(), config)


def matrix_algebra_table(n: int = 2) -> AlgebraTable:
    """M_n(F_2) on matrix units E_ij with the trace form.

    >>> M = matrix_algebra_table(2)
    >>> M.commutator_space().dim, M.center().dim
    (3, 1)
    """
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    products = [
        (idx[i, j], idx[j, l], idx[i, l], 1) for i in range(n) for j in range(n) for l in range(n)
    ]
    unit = np.zeros(n * n, dtype=np.int64)
    for i in range(n):
        unit[idx[i, i]] = 1
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return AlgebraTable(field_create(2, 1), labels, unit, products, unit.copy())


def direct_sum(a: AlgebraTable, b: AlgebraTable, prefixes: Tuple[str, str] = ("A", "B")) -> AlgebraTable:
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field} vs {b.field}")
    shift = np.array([a.dim, a.dim, a.dim, 0], dtype=np.int64)
    products = [list(t) for t in a.products()] + [
        (np.array(t) + shift).tolist() for t in b.products()
    ]
    labels = [f"{prefixes[0]}.{x}" for x in a.labels] + [f"{prefixes[1]}.{x}" for x in b.labels]
    return AlgebraTable(
        a.field,
        labels,
        np.concatenate([a.unit, b.unit]),
        products,
        np.concatenate([a.form, b.form]),
        {**b.config, **a.config},
    )


def zero_table(field: Optional[FiniteField] = None) -> AlgebraTable:
    """The 0-dimensional algebra."""
    return AlgebraTable(field or field_create(2, 1), [], [], [], [])


if __name__ == "__main__":
    import doctest

    doctest.testmod(optionflags=doctest.ELLIPSIS)
