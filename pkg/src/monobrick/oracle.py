"""Finite-field model of module categories over the bundled quiver presets.

Members of the model are multisets of indecomposable names (``()`` is the
zero module), kept up to a total dimension bound.  Identification of an
arbitrary representation works by dimension vector plus hom-dimension
fingerprint against the indecomposables; the fingerprint table is checked
for collisions up front so a lookup can never be ambiguous.

Two styles of computation coexist deliberately.  Brick-level checks
(``is_brick``, ``mono_ok`` and the censuses built on them) iterate over
actual hom elements.  Category-level operations (``filt``, ``simp``,
closure flags, the W and F maps) instead factor every morphism through its
image, so they only consult the subquotient tables; the element route would
be hopeless at dimension 36.  Tests compare both styles where both are
affordable.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from monobrick import fp
from monobrick.arcs import Arc, HomKind, socle_series
from monobrick.diagrams import iter_index_cliques
from monobrick.poset import covering_pairs, maximal_elements
from monobrick.presets import Preset, Rep, direct_sum, get_preset

Member = tuple[str, ...]

ZERO: Member = ()

DEFAULT_DIM_BOUND = 6

_ELEMENT_BUDGET = 70_000


class OracleError(RuntimeError):
    """A model-level guarantee failed (or would be too large to check)."""


@dataclass(frozen=True)
class ClosureFlags:
    """Which constructions stay inside a subcategory set.

    ``skipped_extension_pairs`` counts ordered pairs of members whose
    dimensions sum past the bound, where middle terms of extensions would
    fall outside the modelled universe; the extension flag is silent about
    those.
    """

    extensions: bool
    subobjects: bool
    quotients: bool
    summands: bool
    kernels: bool
    images: bool
    cokernels: bool
    skipped_extension_pairs: int


def _unpack_element(
    flat: tuple[int, ...], x_dims: tuple[int, ...], y_dims: tuple[int, ...]
) -> tuple[fp.Matrix, ...]:
    mats = []
    pos = 0
    for xv, yv in zip(x_dims, y_dims):
        rows = tuple(tuple(flat[pos + i * yv : pos + (i + 1) * yv]) for i in range(xv))
        mats.append(rows)
        pos += xv * yv
    return tuple(mats)


def element_is_zero(element: tuple[fp.Matrix, ...]) -> bool:
    return all(fp.is_zero_matrix(m) for m in element)


def element_is_injective(
    element: tuple[fp.Matrix, ...], x_dims: tuple[int, ...], p: int
) -> bool:
    return all(
        fp.rank(m, p) == xv for m, xv in zip(element, x_dims) if xv
    )


def element_is_invertible(
    element: tuple[fp.Matrix, ...],
    x_dims: tuple[int, ...],
    y_dims: tuple[int, ...],
    p: int,
) -> bool:
    if x_dims != y_dims:
        return False
    return element_is_injective(element, x_dims, p)


class Oracle:
    def __init__(self, preset: Preset, dim_bound: int = DEFAULT_DIM_BOUND):
        max_indec = max(r.total_dim for r in preset.indec_reps)
        if dim_bound < max_indec:
            raise ValueError(
                f"dimension bound {dim_bound} misses indecomposables of "
                f"dimension {max_indec}"
            )
        self.preset = preset
        self.p = preset.p
        self.dim_bound = dim_bound
        self._order = {n: i for i, n in enumerate(preset.indec_names)}
        self._rep_cache: dict[Member, Rep] = {}
        self._identify_cache: dict[Rep, Member] = {}
        self._table_cache: dict[Member, frozenset[tuple[Member, Member]]] = {}
        self._hom_basis_cache: dict[tuple[Member, Member], tuple] = {}

        self._indec_hom = tuple(
            tuple(
                self._hom_dim_reps(a, b) for b in preset.indec_reps
            )
            for a in preset.indec_reps
        )
        self.members = self._build_universe()
        self.index = {m: i for i, m in enumerate(self.members)}
        self._by_dims: dict[tuple[int, ...], list[Member]] = {}
        for m in self.members:
            self._by_dims.setdefault(self.dims_of(m), []).append(m)
        self._fingerprint_to: dict[Member, tuple[int, ...]] = {}
        self._fingerprint_from: dict[Member, tuple[int, ...]] = {}
        self._check_fingerprints()
        self._simple_at_vertex = self._locate_simples()

    # ------------------------------------------------------------------
    # universe bookkeeping

    def _build_universe(self) -> tuple[Member, ...]:
        names = self.preset.indec_names
        sizes = [r.total_dim for r in self.preset.indec_reps]
        found: list[Member] = []

        def rec(i: int, budget: int, acc: list[str]) -> None:
            if i == len(names):
                found.append(tuple(acc))
                return
            for count in range(budget // sizes[i] + 1):
                rec(i + 1, budget - count * sizes[i], acc + [names[i]] * count)

        rec(0, self.dim_bound, [])
        found.sort(key=lambda m: (self.dim_of(m), self.dims_of(m), self._key(m)))
        return tuple(found)

    def _key(self, member: Member) -> tuple[int, ...]:
        return tuple(self._order[n] for n in member)

    def member_from_names(self, names) -> Member:
        member = tuple(sorted(names, key=self._order.__getitem__))
        if member not in self.index:
            raise OracleError(f"{member} lies outside the modelled universe")
        return member

    def rep_of(self, member: Member) -> Rep:
        rep = self._rep_cache.get(member)
        if rep is None:
            rep = direct_sum(
                self.preset,
                tuple(self.preset.rep_of_indec(n) for n in member),
            )
            self._rep_cache[member] = rep
        return rep

    def dims_of(self, member: Member) -> tuple[int, ...]:
        return self.rep_of(member).dims

    def dim_of(self, member: Member) -> int:
        return sum(self.dims_of(member))

    def _check_fingerprints(self) -> None:
        n = len(self.preset.indec_names)
        seen: dict[tuple, Member] = {}
        for m in self.members:
            counts = Counter(m)
            to = tuple(
                sum(
                    counts[a] * self._indec_hom[self._order[a]][j]
                    for a in counts
                )
                for j in range(n)
            )
            frm = tuple(
                sum(
                    counts[a] * self._indec_hom[j][self._order[a]]
                    for a in counts
                )
                for j in range(n)
            )
            self._fingerprint_to[m] = to
            self._fingerprint_from[m] = frm
            key = (self.dims_of(m), to, frm)
            if key in seen:
                raise OracleError(
                    f"fingerprint collision between {seen[key]} and {m}"
                )
            seen[key] = m

    def _locate_simples(self) -> tuple[str, ...]:
        out = []
        for v in range(self.preset.num_vertices):
            indicator = tuple(
                1 if w == v else 0 for w in range(self.preset.num_vertices)
            )
            matches = [
                n
                for n, r in zip(self.preset.indec_names, self.preset.indec_reps)
                if r.dims == indicator
            ]
            if len(matches) != 1:
                raise OracleError(f"no unique simple at vertex {v + 1}")
            out.append(matches[0])
        return tuple(out)

    # ------------------------------------------------------------------
    # hom spaces

    def _hom_system(self, x: Rep, y: Rep) -> tuple[list[tuple[int, ...]], int, list[int]]:
        nv = len(x.dims)
        offsets = []
        total = 0
        for v in range(nv):
            offsets.append(total)
            total += x.dims[v] * y.dims[v]
        rows = []
        p = self.p
        for a, (s, t) in enumerate(self.preset.arrows):
            xa, ya = x.mats[a], y.mats[a]
            for i in range(x.dims[s]):
                for j in range(y.dims[t]):
                    row = [0] * total
                    for k in range(x.dims[t]):
                        row[offsets[t] + k * y.dims[t] + j] = (
                            row[offsets[t] + k * y.dims[t] + j] + xa[i][k]
                        ) % p
                    for k in range(y.dims[s]):
                        row[offsets[s] + i * y.dims[s] + k] = (
                            row[offsets[s] + i * y.dims[s] + k] - ya[k][j]
                        ) % p
                    if any(row):
                        rows.append(tuple(row))
        return rows, total, offsets

    def _hom_dim_reps(self, x: Rep, y: Rep) -> int:
        rows, total, _ = self._hom_system(x, y)
        return total - fp.rank(rows, self.p)

    def _hom_basis_reps(self, x: Rep, y: Rep) -> list[tuple[fp.Matrix, ...]]:
        rows, total, _ = self._hom_system(x, y)
        flats = fp.kernel_basis(tuple(rows), total, self.p)
        return [_unpack_element(f, x.dims, y.dims) for f in flats]

    def hom_dim(self, x: Member, y: Member) -> int:
        """Additive over summands, so no linear algebra is needed here."""
        cx, cy = Counter(x), Counter(y)
        return sum(
            cx[a] * cy[b] * self._indec_hom[self._order[a]][self._order[b]]
            for a in cx
            for b in cy
        )

    def hom_basis(self, x: Member, y: Member) -> list[tuple[fp.Matrix, ...]]:
        cached = self._hom_basis_cache.get((x, y))
        if cached is None:
            cached = tuple(self._hom_basis_reps(self.rep_of(x), self.rep_of(y)))
            self._hom_basis_cache[(x, y)] = cached
        return list(cached)

    def hom_elements(self, x: Member, y: Member, include_zero: bool = False):
        """Yield every (or every nonzero) hom element as per-vertex matrices."""
        basis = self.hom_basis(x, y)
        if self.p ** len(basis) > _ELEMENT_BUDGET:
            raise OracleError(
                f"hom space of dimension {len(basis)} is too large to iterate"
            )
        x_dims, y_dims = self.dims_of(x), self.dims_of(y)
        p = self.p
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            if not include_zero and not any(coeffs):
                continue
            combined = []
            for v in range(len(x_dims)):
                rows = []
                for i in range(x_dims[v]):
                    rows.append(
                        tuple(
                            sum(
                                c * el[v][i][j] for c, el in zip(coeffs, basis)
                            )
                            % p
                            for j in range(y_dims[v])
                        )
                    )
                combined.append(tuple(rows))
            yield tuple(combined)

    # ------------------------------------------------------------------
    # identification

    def identify(self, rep: Rep, strict: bool = False) -> Member:
        if not strict:
            hit = self._identify_cache.get(rep)
            if hit is not None:
                return hit
        candidates = list(self._by_dims.get(rep.dims, ()))
        if candidates and len(candidates) > 1:
            for j, indec_rep in enumerate(self.preset.indec_reps):
                d = self._hom_dim_reps(rep, indec_rep)
                candidates = [
                    m for m in candidates if self._fingerprint_to[m][j] == d
                ]
                if len(candidates) <= 1:
                    break
            if len(candidates) > 1:
                for j, indec_rep in enumerate(self.preset.indec_reps):
                    d = self._hom_dim_reps(indec_rep, rep)
                    candidates = [
                        m for m in candidates if self._fingerprint_from[m][j] == d
                    ]
                    if len(candidates) <= 1:
                        break
        if len(candidates) != 1:
            raise OracleError(
                f"representation with dimensions {rep.dims} matches "
                f"{len(candidates)} members; the indecomposable list cannot "
                "be complete"
            )
        member = candidates[0]
        if strict:
            to = tuple(
                self._hom_dim_reps(rep, r) for r in self.preset.indec_reps
            )
            frm = tuple(
                self._hom_dim_reps(r, rep) for r in self.preset.indec_reps
            )
            if to != self._fingerprint_to[member] or frm != self._fingerprint_from[member]:
                raise OracleError(
                    f"fingerprint audit failed for a representation matched "
                    f"to {member}"
                )
        self._identify_cache[rep] = member
        return member

    def assert_isomorphic(self, rep: Rep, member: Member) -> None:
        """Audit fallback: search for an invertible map element by element."""
        target = self.rep_of(member)
        if rep.dims != target.dims:
            raise OracleError(f"{member} has different dimensions than the input")
        basis = self._hom_basis_reps(rep, target)
        if self.p ** len(basis) > _ELEMENT_BUDGET:
            raise OracleError("hom space too large for the exhaustive audit")
        for coeffs in itertools.product(range(self.p), repeat=len(basis)):
            if not any(coeffs):
                continue
            element = []
            for v in range(len(rep.dims)):
                rows = tuple(
                    tuple(
                        sum(c * el[v][i][j] for c, el in zip(coeffs, basis))
                        % self.p
                        for j in range(target.dims[v])
                    )
                    for i in range(rep.dims[v])
                )
                element.append(rows)
            if element_is_invertible(tuple(element), rep.dims, target.dims, self.p):
                return
        raise OracleError(f"no isomorphism onto {member} exists")

    # ------------------------------------------------------------------
    # subquotient tables

    def _sub_rep(self, rep: Rep, spaces) -> Rep:
        dims = tuple(len(basis) for basis, _ in spaces)
        mats = []
        for a, (s, t) in enumerate(self.preset.arrows):
            basis_s = spaces[s][0]
            basis_t, pivots_t = spaces[t]
            rows = tuple(
                fp.coords_in_span(
                    fp.vec_mat(u, rep.mats[a], self.p), basis_t, pivots_t, self.p
                )
                for u in basis_s
            )
            mats.append(rows)
        return Rep(dims, tuple(mats))

    def _quot_rep(self, rep: Rep, spaces) -> Rep:
        nonpivots = [
            tuple(c for c in range(rep.dims[v]) if c not in spaces[v][1])
            for v in range(len(rep.dims))
        ]
        dims = tuple(len(np) for np in nonpivots)
        mats = []
        for a, (s, t) in enumerate(self.preset.arrows):
            basis_t, pivots_t = spaces[t]
            rows = []
            for c in nonpivots[s]:
                unit = tuple(1 if i == c else 0 for i in range(rep.dims[s]))
                image = fp.vec_mat(unit, rep.mats[a], self.p)
                reduced = fp.reduce_vec(image, basis_t, pivots_t, self.p)
                rows.append(tuple(reduced[c2] for c2 in nonpivots[t]))
            mats.append(tuple(rows))
        return Rep(dims, tuple(mats))

    def _semisimple_pairs(self, member: Member) -> frozenset[tuple[Member, Member]]:
        counts = Counter(member)
        simples = sorted(counts, key=self._order.__getitem__)
        pairs = set()
        for sub_counts in itertools.product(
            *(range(counts[s] + 1) for s in simples)
        ):
            sub = []
            quot = []
            for s, k in zip(simples, sub_counts):
                sub.extend([s] * k)
                quot.extend([s] * (counts[s] - k))
            pairs.add(
                (
                    tuple(sorted(sub, key=self._order.__getitem__)),
                    tuple(sorted(quot, key=self._order.__getitem__)),
                )
            )
        return frozenset(pairs)

    def subquotients(self, member: Member) -> frozenset[tuple[Member, Member]]:
        """All (subobject, quotient) pairs of the member, up to isomorphism.

        Each stable tuple of subspaces contributes the pair consisting of
        the restricted representation and the induced quotient; the trivial
        tuples give ``(0, X)`` and ``(X, 0)``.
        """
        cached = self._table_cache.get(member)
        if cached is not None:
            return cached
        rep = self.rep_of(member)
        if all(fp.is_zero_matrix(m) for m in rep.mats):
            pairs = self._semisimple_pairs(member)
        else:
            pairs = {(ZERO, member), (member, ZERO)}
            per_vertex = [fp.subspaces(d, self.p) for d in rep.dims]
            total = rep.total_dim
            for spaces in itertools.product(*per_vertex):
                sub_dim = sum(len(basis) for basis, _ in spaces)
                if sub_dim in (0, total):
                    continue
                stable = True
                for a, (s, t) in enumerate(self.preset.arrows):
                    basis_t, pivots_t = spaces[t]
                    for u in spaces[s][0]:
                        image = fp.vec_mat(u, rep.mats[a], self.p)
                        if not fp.in_span(image, basis_t, pivots_t, self.p):
                            stable = False
                            break
                    if not stable:
                        break
                if not stable:
                    continue
                sub = self.identify(self._sub_rep(rep, spaces))
                quot = self.identify(self._quot_rep(rep, spaces))
                pairs.add((sub, quot))
            pairs = frozenset(pairs)
        self._table_cache[member] = pairs
        return pairs

    def subobjects(self, member: Member) -> frozenset[Member]:
        return frozenset(a for a, _ in self.subquotients(member))

    def quotient_objects(self, member: Member) -> frozenset[Member]:
        return frozenset(q for _, q in self.subquotients(member))

    # ------------------------------------------------------------------
    # bricks and censuses (element style)

    def is_brick(self, member: Member) -> bool:
        """Nonzero, with every nonzero endomorphism invertible."""
        if member == ZERO:
            return False
        d = self.hom_dim(member, member)
        if self.p**d > _ELEMENT_BUDGET:
            # A space that large only occurs for decomposable members, and a
            # projection onto a proper summand is never invertible.
            return False
        dims = self.dims_of(member)
        return all(
            element_is_invertible(el, dims, dims, self.p)
            for el in self.hom_elements(member, member)
        )

    def brick_members(self) -> tuple[Member, ...]:
        return tuple(
            (n,) for n in self.preset.indec_names if self.is_brick((n,))
        )

    def mono_ok(self, x: Member, y: Member) -> bool:
        """Every hom element is zero or injective (checked element by element)."""
        if self.hom_dim(x, y) == 0:
            return True
        dims = self.dims_of(x)
        return all(
            element_is_injective(el, dims, self.p)
            for el in self.hom_elements(x, y)
        )

    def mono_ok_factored(self, x: Member, y: Member) -> bool:
        """Same predicate via common subquotients; kept as a cross-check."""
        common = self.quotient_objects(x) & self.subobjects(y)
        return common <= {ZERO, x}

    def _census(self, pair_ok) -> list[frozenset[Member]]:
        bricks = self.brick_members()
        adjacency = []
        for i, b in enumerate(bricks):
            mask = 0
            for j, c in enumerate(bricks):
                if i != j and pair_ok(b, c) and pair_ok(c, b):
                    mask |= 1 << j
            adjacency.append(mask)
        return [
            frozenset(bricks[i] for i in chosen)
            for chosen in iter_index_cliques(adjacency)
        ]

    def monobricks(self) -> list[frozenset[Member]]:
        return self._census(self.mono_ok)

    def semibricks(self) -> list[frozenset[Member]]:
        return self._census(lambda x, y: self.hom_dim(x, y) == 0)

    # ------------------------------------------------------------------
    # brick poset, maximal elements, closure

    def brick_leq(self, a: Member, b: Member) -> bool:
        return a == b or a in self.subobjects(b)

    def mmax(self, bricks) -> frozenset[Member]:
        return frozenset(maximal_elements(list(bricks), self.brick_leq))

    def brick_covers(self, bricks) -> frozenset[tuple[Member, Member]]:
        return frozenset(covering_pairs(list(bricks), self.brick_leq))

    def cofinal_closure(self, bricks) -> frozenset[Member]:
        """Adjoin subobjects that map into every member by zero or a mono."""
        original = frozenset(bricks)
        grown = set(original)
        candidates = set()
        for m in original:
            candidates |= self.subobjects(m)
        candidates -= grown | {ZERO}
        for n in sorted(candidates, key=self.index.__getitem__):
            if not self.is_brick(n):
                continue
            if all(self.mono_ok(n, m) for m in original):
                grown.add(n)
        return frozenset(grown)

    # ------------------------------------------------------------------
    # subcategory sets (factorisation style)

    def _require_subcat(self, e) -> frozenset[Member]:
        e = frozenset(e)
        if ZERO not in e:
            raise OracleError("a subcategory set must contain the zero module")
        stray = e - set(self.members)
        if stray:
            raise OracleError(f"members outside the universe: {sorted(stray)}")
        return e

    def filt(self, gens) -> frozenset[Member]:
        """Close a generating set under extensions, one dimension at a time.

        A member joins once some proper nonzero subobject and the matching
        quotient are both already in; sweeping members by increasing total
        dimension makes a single pass sufficient, because both halves of any
        witnessing pair are strictly smaller.
        """
        result = set(self._require_subcat(set(gens) | {ZERO}))
        for x in self.members:
            if x in result or x == ZERO:
                continue
            for a, q in self.subquotients(x):
                if a != ZERO and q != ZERO and a in result and q in result:
                    result.add(x)
                    break
        return frozenset(result)

    def simp(self, e) -> frozenset[Member]:
        """Members with no proper nonzero subobject-quotient split inside e."""
        e = self._require_subcat(e)
        out = set()
        for m in e - {ZERO}:
            if not any(
                a != ZERO and q != ZERO and a in e and q in e
                for a, q in self.subquotients(m)
            ):
                out.add(m)
        return frozenset(out)

    def _union_subobjects(self, e) -> frozenset[Member]:
        out: set[Member] = set()
        for x in e:
            out |= self.subobjects(x)
        return frozenset(out)

    def _union_quotients(self, e) -> frozenset[Member]:
        out: set[Member] = set()
        for x in e:
            out |= self.quotient_objects(x)
        return frozenset(out)

    def closure_flags(self, e) -> ClosureFlags:
        e = self._require_subcat(e)
        union_subs = self._union_subobjects(e)
        union_quots = self._union_quotients(e)

        subobjects = all(self.subobjects(x) <= e for x in e)
        quotients = all(self.quotient_objects(x) <= e for x in e)

        summands = True
        for x in e:
            counts = Counter(x)
            names = sorted(counts, key=self._order.__getitem__)
            for sub_counts in itertools.product(
                *(range(counts[n] + 1) for n in names)
            ):
                part: list[str] = []
                for n, k in zip(names, sub_counts):
                    part.extend([n] * k)
                if tuple(part) not in e:
                    summands = False
                    break
            if not summands:
                break

        kernels = all(
            a in e
            for x in e
            for a, q in self.subquotients(x)
            if q in union_subs
        )
        images = all(
            (self.quotient_objects(x) & union_subs) <= e for x in e
        )
        cokernels = all(
            c in e
            for y in e
            for b, c in self.subquotients(y)
            if b in union_quots
        )

        extensions = True
        for x in self.members:
            if x in e:
                continue
            if any(a in e and q in e for a, q in self.subquotients(x)):
                extensions = False
                break

        skipped = sum(
            1
            for s in e
            for q in e
            if self.dim_of(s) + self.dim_of(q) > self.dim_bound
        )
        return ClosureFlags(
            extensions=extensions,
            subobjects=subobjects,
            quotients=quotients,
            summands=summands,
            kernels=kernels,
            images=images,
            cokernels=cokernels,
            skipped_extension_pairs=skipped,
        )

    def is_wide(self, e) -> bool:
        flags = self.closure_flags(e)
        return flags.extensions and flags.kernels and flags.cokernels

    def is_torsion_free_class(self, e) -> bool:
        flags = self.closure_flags(e)
        return flags.extensions and flags.subobjects

    def is_left_schur(self, e) -> bool:
        """No member simple in e admits a proper nonzero quotient embedding
        into a member."""
        e = self._require_subcat(e)
        union_subs = self._union_subobjects(e)
        for m in self.simp(e):
            if (self.quotient_objects(m) & union_subs) - {ZERO, m}:
                return False
        return True

    def is_left_schur_elementwise(self, e) -> bool:
        """Literal reading: every nonzero map out of a simple is injective.

        Only usable when the hom spaces involved are small; the factored
        version above is the production route.
        """
        e = self._require_subcat(e)
        for m in self.simp(e):
            dims = self.dims_of(m)
            for x in e - {ZERO}:
                for el in self.hom_elements(m, x):
                    if not element_is_injective(el, dims, self.p):
                        return False
        return True

    def w_map(self, e) -> frozenset[Member]:
        """Members whose every cokernel into the set stays in the set."""
        e = self._require_subcat(e)
        bad_images: set[Member] = set()
        for x in e:
            for b, c in self.subquotients(x):
                if c not in e:
                    bad_images.add(b)
        return frozenset(
            w for w in e if not (self.quotient_objects(w) & bad_images)
        )

    def f_map(self, bricks) -> frozenset[Member]:
        gens: set[Member] = set()
        for m in bricks:
            gens |= self.subobjects(m)
        return self.filt(gens)

    # ------------------------------------------------------------------
    # bridging to arc combinatorics

    def socle_dims(self, rep: Rep) -> tuple[int, ...]:
        out = []
        for v in range(self.preset.num_vertices):
            arrows_out = [
                a for a, (s, _) in enumerate(self.preset.arrows) if s == v
            ]
            rows = []
            for i in range(rep.dims[v]):
                row: list[int] = []
                for a in arrows_out:
                    row.extend(rep.mats[a][i])
                rows.append(tuple(row))
            out.append(rep.dims[v] - fp.rank(rows, self.p))
        return tuple(out)

    def arc_member(self, arc: Arc) -> Member:
        algebra = self.preset.arc_algebra
        if algebra is None:
            raise OracleError(f"{self.preset.name} has no arc model")
        algebra.check_arc(arc)
        series = set(socle_series(arc, algebra.marks))
        dims = tuple(
            1 if v + 1 in series else 0 for v in range(self.preset.num_vertices)
        )
        socle = tuple(
            1 if v + 1 == arc.start else 0
            for v in range(self.preset.num_vertices)
        )
        matches = [
            (n,)
            for n, r in zip(self.preset.indec_names, self.preset.indec_reps)
            if r.dims == dims and self.socle_dims(r) == socle
        ]
        if len(matches) != 1:
            raise OracleError(f"arc {arc} matches {len(matches)} indecomposables")
        return matches[0]

    def arc_hom_kind(self, a: Arc, b: Arc) -> HomKind:
        """Classify the hom space between the modules of two arcs."""
        x, y = self.arc_member(a), self.arc_member(b)
        d = self.hom_dim(x, y)
        if d == 0:
            return HomKind.ZERO
        if d != 1:
            raise OracleError(
                f"hom space between {x} and {y} has dimension {d}"
            )
        x_dims, y_dims = self.dims_of(x), self.dims_of(y)
        kinds = set()
        for el in self.hom_elements(x, y):
            if element_is_invertible(el, x_dims, y_dims, self.p):
                kinds.add(HomKind.ISO)
            elif element_is_injective(el, x_dims, self.p):
                kinds.add(HomKind.INJECTION)
            else:
                kinds.add(HomKind.NONZERO_NON_INJECTION)
        if len(kinds) != 1:
            raise OracleError(
                f"nonzero maps between {x} and {y} disagree in kind: {kinds}"
            )
        return kinds.pop()


@lru_cache(maxsize=None)
def get_oracle(
    preset_name: str, dim_bound: int = DEFAULT_DIM_BOUND, p: int = 2
) -> Oracle:
    return Oracle(get_preset(preset_name, p), dim_bound)
