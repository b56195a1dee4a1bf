"""Cluster-to-crossbar mapping honoring region state rules.

Placement pushes HRS-heavy neurons toward low row/column indices (the short
paths, where region A admits only HRS) and keeps every synapse on a cell
whose region permits its state. Configuration selection then picks the
cheapest array shape that contains the used cells, so the full '11' shape is
used only when nothing smaller fits.

The algorithm is greedy-with-repair and fully deterministic:

1. sort post-neurons by descending HRS-synapse count into columns 0.., ties
   by original index; pre-neurons likewise into rows;
2. count region violations (non-HRS in A, non-LRS1 in B);
3. repair with best-improvement row swaps, then column swaps (batches of
   disjoint improving swaps per pair scan, until an axis is stable);
4. if violations remain, solve the band assignment exactly: a cell violates
   only through its row/column bands, which reduces feasibility to a small
   constraint problem per cluster (see _band_stage);
5. shift any still-violating neuron into the first free index at or beyond
   N_h that clears its violations;
6. raise Infeasible if violations persist.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .crossbar import (
    CONFIG_11,
    HRS,
    LRS1,
    Configuration,
    CrossbarSpec,
    config_by_name,
    config_dimensions,
    legal_configurations,
    permits,
    static_energy_weight,
)
from .errors import CapacityExceeded, Infeasible, ValidationError
from .techmodel import TechnologyParams
from .workload import Cluster, Network, Route


@dataclass(frozen=True)
class Hardware:
    crossbar_count: int
    spec: CrossbarSpec
    tech: TechnologyParams

    def __post_init__(self):
        if self.crossbar_count < 1:
            raise ValidationError("hardware needs at least one crossbar")


@dataclass(frozen=True)
class Assignment:
    row_of_pre: dict   # pre-neuron id -> row
    col_of_post: dict  # post-neuron id -> column
    cells: tuple       # (row, col) per synapse, in cluster synapse order


@dataclass(frozen=True)
class PlacedSynapse:
    pre: int
    post: int
    state: str
    row: int
    col: int


@dataclass(frozen=True)
class CrossbarPlacement:
    crossbar_id: int
    cluster_id: int
    spec: CrossbarSpec
    config: Configuration
    row_of_pre: dict
    col_of_post: dict
    synapses: tuple[PlacedSynapse, ...]

    @property
    def m(self) -> int:
        """Count of LRS-state synapses."""
        return sum(1 for s in self.synapses if s.state != HRS)

    @property
    def n_hrs(self) -> int:
        return sum(1 for s in self.synapses if s.state == HRS)

    @property
    def used_cells(self) -> set:
        return {(s.row, s.col) for s in self.synapses}


@dataclass(frozen=True)
class Placement:
    crossbars: tuple[CrossbarPlacement, ...]
    crossbar_count: int
    routes: tuple[Route, ...] = ()


class _SynapseArrays:
    """Per-cluster synapse data in array form for fast violation checks."""

    def __init__(self, cluster):
        self.pre = np.array([s.pre for s in cluster.synapses], dtype=int)
        self.post = np.array([s.post for s in cluster.synapses], dtype=int)
        self.not_hrs = np.array([s.state != HRS for s in cluster.synapses])
        self.not_lrs1 = np.array([s.state != LRS1 for s in cluster.synapses])


def _violations(arrays: _SynapseArrays, rows, cols, spec):
    """Indices of synapses whose cell region rejects their state."""
    n, n_h, n_l = spec.n, spec.n_h, spec.n_l
    r = rows[arrays.pre]
    c = cols[arrays.post]
    bad = (arrays.not_hrs & (r < n_h) & (c < n_h)) \
        | (arrays.not_lrs1 & (r >= n - n_l) & (c >= n - n_l))
    return np.nonzero(bad)[0]


def _swap_repair(spec, occupants, cost_a, cost_b) -> int:
    """Best-improvement swap passes over one axis; mutates `occupants`.

    occupants[slot] = neuron index or -1. cost_a[i]/cost_b[i] is the number of
    violations neuron i incurs when seated in the near-region band (slots
    < N_h) / far-region band (slots >= N - N_l). Empty slots cost nothing, so
    a "swap" with one covers moving a neuron to a free slot.

    Each pass evaluates every slot pair once, then applies improving swaps in
    ascending-delta order while the pairs stay disjoint; a swap's improvement
    depends only on its own two slots, so every applied swap keeps its exact
    pre-pass delta and the pass strictly reduces the violation count. Returns
    the number of swaps applied.
    """
    n, n_h, n_l = spec.n, spec.n_h, spec.n_l
    slots = np.arange(n)
    in_a = slots < n_h
    in_b = slots >= n - n_l
    applied_total = 0
    while True:
        ca = np.where(occupants >= 0, cost_a[np.maximum(occupants, 0)], 0)
        cb = np.where(occupants >= 0, cost_b[np.maximum(occupants, 0)], 0)
        cost_at = ca[:, None] * in_a[None, :] + cb[:, None] * in_b[None, :]
        cur = np.diagonal(cost_at).copy()
        delta = cost_at + cost_at.T - cur[:, None] - cur[None, :]
        ii, jj = np.nonzero(delta < 0)
        upper = ii < jj  # delta is symmetric
        ii, jj = ii[upper], jj[upper]
        if ii.size == 0:
            return applied_total
        touched = np.zeros(n, dtype=bool)
        applied = 0
        for k in np.argsort(delta[ii, jj], kind="stable"):
            i, j = int(ii[k]), int(jj[k])
            if touched[i] or touched[j]:
                continue
            occupants[i], occupants[j] = occupants[j], occupants[i]
            touched[i] = touched[j] = True
            applied += 1
        applied_total += applied


def assign_cluster(cluster: Cluster, spec: CrossbarSpec) -> Assignment:
    """Deterministic greedy-with-repair neuron/synapse assignment."""
    n = spec.n
    n_pre, n_post = len(cluster.pre_neurons), len(cluster.post_neurons)
    if n_pre > n or n_post > n:
        raise Infeasible(f"cluster {cluster.id} ({n_pre}x{n_post}) exceeds {n}x{n} crossbar",
                         cluster_id=cluster.id,
                         violations=[f"cluster dimensions {n_pre}x{n_post}"])

    hrs_pre = np.zeros(n_pre, dtype=int)
    hrs_post = np.zeros(n_post, dtype=int)
    for s in cluster.synapses:
        if s.state == HRS:
            hrs_pre[s.pre] += 1
            hrs_post[s.post] += 1

    rows = np.full(n_pre, -1, dtype=int)
    cols = np.full(n_post, -1, dtype=int)
    occ_rows = np.full(n, -1, dtype=int)
    occ_cols = np.full(n, -1, dtype=int)
    for slot, i in enumerate(sorted(range(n_pre), key=lambda i: (-hrs_pre[i], i))):
        rows[i] = slot
        occ_rows[slot] = i
    for slot, j in enumerate(sorted(range(n_post), key=lambda j: (-hrs_post[j], j))):
        cols[j] = slot
        occ_cols[slot] = j

    if spec.n_h > 0 or spec.n_l > 0:
        arrays = _SynapseArrays(cluster)
        if len(_violations(arrays, rows, cols, spec)):
            _repair(cluster, arrays, spec, rows, cols, occ_rows, occ_cols)
        bad = _violations(arrays, rows, cols, spec)
        if len(bad):
            details = [f"synapse {i} ({cluster.synapses[i].state}) at "
                       f"({rows[cluster.synapses[i].pre]},{cols[cluster.synapses[i].post]})" for i in bad]
            raise Infeasible(f"cluster {cluster.id}: {len(bad)} region violations remain",
                             cluster_id=cluster.id, violations=details)

    return Assignment(
        row_of_pre={nid: int(rows[i]) for i, nid in enumerate(cluster.pre_neurons)},
        col_of_post={nid: int(cols[j]) for j, nid in enumerate(cluster.post_neurons)},
        cells=tuple((int(rows[s.pre]), int(cols[s.post])) for s in cluster.synapses),
    )


def _repair(cluster, arrays, spec, rows, cols, occ_rows, occ_cols):
    n, n_h, n_l = spec.n, spec.n_h, spec.n_l
    n_pre, n_post = len(cluster.pre_neurons), len(cluster.post_neurons)

    def row_pass():
        # Per pre-neuron: violations incurred seated in each band, columns fixed.
        pre_a = np.zeros(n_pre, dtype=int)
        pre_b = np.zeros(n_pre, dtype=int)
        for s in cluster.synapses:
            if s.state != HRS and cols[s.post] < n_h:
                pre_a[s.pre] += 1
            if s.state != LRS1 and cols[s.post] >= n - n_l:
                pre_b[s.pre] += 1
        applied = _swap_repair(spec, occ_rows, pre_a, pre_b)
        rows[:] = -1
        for slot in range(n):
            if occ_rows[slot] >= 0:
                rows[occ_rows[slot]] = slot
        return applied

    def col_pass():
        post_a = np.zeros(n_post, dtype=int)
        post_b = np.zeros(n_post, dtype=int)
        for s in cluster.synapses:
            if s.state != HRS and rows[s.pre] < n_h:
                post_a[s.post] += 1
            if s.state != LRS1 and rows[s.pre] >= n - n_l:
                post_b[s.post] += 1
        applied = _swap_repair(spec, occ_cols, post_a, post_b)
        cols[:] = -1
        for slot in range(n):
            if occ_cols[slot] >= 0:
                cols[occ_cols[slot]] = slot
        return applied

    # One best-improvement cycle over each axis catches the easy cases.
    row_pass()
    if not len(_violations(arrays, rows, cols, spec)):
        return
    col_pass()
    if not len(_violations(arrays, rows, cols, spec)):
        return

    # Swap repair is local search and stalls on tightly coupled clusters, so
    # fall back to the exact band formulation: a cell violates only through
    # the bands its row and column sit in, which makes feasibility a small
    # constraint problem over per-neuron band choices.
    if _band_stage(cluster, arrays, spec, rows, cols, occ_rows, occ_cols):
        return

    # Last resort: move still-violating neurons to a free slot, preferring the
    # first free index >= N_h (region C rows/columns).
    pre_syn = [[] for _ in range(n_pre)]
    post_syn = [[] for _ in range(n_post)]
    for s in cluster.synapses:
        pre_syn[s.pre].append(s)
        post_syn[s.post].append(s)

    def own_violations_pre(i, row):
        return sum(1 for s in pre_syn[i]
                   if (s.state != HRS and row < n_h and cols[s.post] < n_h)
                   or (s.state != LRS1 and row >= n - n_l and cols[s.post] >= n - n_l))

    def own_violations_post(j, col):
        return sum(1 for s in post_syn[j]
                   if (s.state != HRS and rows[s.pre] < n_h and col < n_h)
                   or (s.state != LRS1 and rows[s.pre] >= n - n_l and col >= n - n_l))

    def shift(idx_owner, own_violations, placed, occ):
        free = [slot for slot in range(n) if occ[slot] < 0]
        for slot in sorted(free, key=lambda x: (x < n_h, x)):
            if own_violations(idx_owner, slot) == 0:
                occ[placed[idx_owner]] = -1
                occ[slot] = idx_owner
                placed[idx_owner] = slot
                return True
        return False

    for idx in _violations(arrays, rows, cols, spec):
        s = cluster.synapses[idx]
        r, c = rows[s.pre], cols[s.post]
        if s.state != HRS and r < n_h and c < n_h or s.state != LRS1 and r >= n - n_l and c >= n - n_l:
            if own_violations_pre(s.pre, rows[s.pre]) and shift(s.pre, own_violations_pre, rows, occ_rows):
                continue
            if own_violations_post(s.post, cols[s.post]):
                shift(s.post, own_violations_post, cols, occ_cols)


def _band_stage(cluster, arrays, spec, rows, cols, occ_rows, occ_cols) -> bool:
    """Exact band assignment; reseats every neuron on success.

    Violations depend only on which horizontal/vertical band a neuron sits
    in: region A cells pair a near-band row (slot < N_h) with a near-band
    column, region B a far-band row (slot >= N - N_l) with a far-band
    column, and middle-band seats (region C rows/columns) are safe for
    everything. Assignment is therefore a 3-valued constraint problem: a
    synapse barred from region A forbids near-near between its endpoints,
    one barred from region B forbids far-far, and each band has as many
    seats per axis as it has slots.

    Solved by deterministic trial propagation: bands are tried per neuron in
    a fixed preference order, each trial propagating forbidden-band and
    band-full eliminations; a trial that empties some neuron's domain is
    rolled back. On success, every group packs as low as its band allows,
    HRS-heavy neurons first so they keep the shortest paths.
    """
    n, n_h, n_l = spec.n, spec.n_h, spec.n_l
    NEAR, MIDDLE, FAR = 0, 1, 2
    caps = (n_h, n - n_h - n_l, n_l)
    n_pre, n_post = len(cluster.pre_neurons), len(cluster.post_neurons)
    n_vars = n_pre + n_post

    hrs_pre = np.zeros(n_pre, dtype=int)
    hrs_post = np.zeros(n_post, dtype=int)
    adj_near = [[] for _ in range(n_vars)]  # partners that must leave NEAR if var is NEAR
    adj_far = [[] for _ in range(n_vars)]
    for s in cluster.synapses:
        u, v = s.pre, n_pre + s.post
        if s.state == HRS:
            hrs_pre[s.pre] += 1
            hrs_post[s.post] += 1
        elif n_h > 0:
            adj_near[u].append(v)
            adj_near[v].append(u)
        if s.state != LRS1 and n_l > 0:
            adj_far[u].append(v)
            adj_far[v].append(u)

    # Seat supply per axis: near commits may overflow into middle slots and
    # far commits likewise, so the binding budgets are near+middle vs
    # N_h+mid, far+middle vs N_l+mid, and middle alone vs mid.
    budget_near = n_h + caps[MIDDLE]
    budget_far = n_l + caps[MIDDLE]
    full_domain = (1 << NEAR | 1 << MIDDLE | 1 << FAR) if caps[MIDDLE] > 0 \
        else (1 << NEAR | 1 << FAR)
    domain = [full_domain] * n_vars
    committed = [-1] * n_vars
    used = [[0, 0, 0], [0, 0, 0]]  # per axis

    def axis_of(var):
        return 0 if var < n_pre else 1

    def vars_of(axis):
        return range(0, n_pre) if axis == 0 else range(n_pre, n_vars)

    def rollback(undo):
        for v, old in reversed(undo):
            if old == -1:
                used[axis_of(v)][committed[v]] -= 1
                committed[v] = -1
            else:
                domain[v] = old

    def propagate(var, band):
        # Commits var (plus everything it forces) or rolls itself back.
        undo = []
        queue = [(var, band)]
        qi = 0

        def remove(v, b):
            if committed[v] == b:
                return False
            if committed[v] != -1 or not domain[v] & (1 << b):
                return True
            undo.append((v, domain[v]))
            domain[v] &= ~(1 << b)
            if domain[v] == 0:
                return False
            if domain[v] & (domain[v] - 1) == 0:  # singleton: forced
                queue.append((v, domain[v].bit_length() - 1))
            return True

        def fits(axis, b):
            near_mid = used[axis][NEAR] + used[axis][MIDDLE]
            far_mid = used[axis][FAR] + used[axis][MIDDLE]
            if b == NEAR:
                return near_mid < budget_near
            if b == FAR:
                return far_mid < budget_far
            return (used[axis][MIDDLE] < caps[MIDDLE]
                    and near_mid < budget_near and far_mid < budget_far)

        ok = True
        while ok and qi < len(queue):
            v, b = queue[qi]
            qi += 1
            if committed[v] == b:
                continue
            axis = axis_of(v)
            if committed[v] != -1 or not domain[v] & (1 << b) or not fits(axis, b):
                ok = False
                break
            undo.append((v, -1))  # commit marker
            committed[v] = b
            used[axis][b] += 1
            if b == NEAR:
                ok = all(remove(w, NEAR) for w in adj_near[v])
            elif b == FAR:
                ok = all(remove(w, FAR) for w in adj_far[v])
            # A budget this commit just saturated bars its bands for every
            # uncommitted neuron on the axis.
            barred = 0
            if b != FAR and used[axis][NEAR] + used[axis][MIDDLE] == budget_near:
                barred |= 1 << NEAR | 1 << MIDDLE
            if b != NEAR and used[axis][FAR] + used[axis][MIDDLE] == budget_far:
                barred |= 1 << FAR | 1 << MIDDLE
            if b == MIDDLE and used[axis][MIDDLE] == caps[MIDDLE]:
                barred |= 1 << MIDDLE
            if ok and barred:
                ok = all(remove(w, bb) for w in vars_of(axis) if committed[w] == -1
                         for bb in (NEAR, MIDDLE, FAR) if barred & (1 << bb))
        if not ok:
            rollback(undo)
        return ok

    # Follow the current (swap-repaired) seat where possible: it already
    # approximates a good band shape.
    for var in range(n_vars):
        if committed[var] != -1:
            continue
        current = rows[var] if var < n_pre else cols[var - n_pre]
        if current >= n - n_l:
            preference = (FAR, MIDDLE, NEAR)
        elif current >= n_h:
            preference = (MIDDLE, NEAR, FAR)
        else:
            preference = (NEAR, MIDDLE, FAR)
        if not any(propagate(var, band) for band in preference if domain[var] & (1 << band)):
            return False

    def seat(count, offset, hrs_counts, placed, occ):
        # Everything packs as low as its band allows, maximizing the
        # utilization of the collapsed region: near from slot 0 (overflow
        # into middle slots is safe), the middle group next (never past
        # N-N_l by the budgets), then far-committed neurons, which may use
        # middle slots too. HRS-heavy neurons lead each group so they keep
        # the shortest paths.
        occ[:] = -1
        groups = [sorted((i for i in range(count) if committed[offset + i] == b),
                         key=lambda i: (-hrs_counts[i], i)) for b in (NEAR, MIDDLE, FAR)]
        slots = list(range(len(groups[NEAR])))
        base = max(n_h, len(groups[NEAR]))
        slots += [base + k for k in range(len(groups[MIDDLE]))]
        far_base = base + len(groups[MIDDLE])
        slots += [far_base + k for k in range(len(groups[FAR]))]
        for slot, i in zip(slots, groups[NEAR] + groups[MIDDLE] + groups[FAR]):
            placed[i] = slot
            occ[slot] = i

    seat(n_pre, 0, hrs_pre, rows, occ_rows)
    seat(n_post, n_pre, hrs_post, cols, occ_cols)
    return not len(_violations(arrays, rows, cols, spec))


def select_configuration(assignment: Assignment, spec: CrossbarSpec) -> Configuration:
    """Cheapest legal configuration whose active array contains every cell.

    Weight ties can only occur between configurations with identical
    dimensions (degenerate P or Q); they go to the one with fewer control
    bits raised. A fully degenerate partition (P = Q = N) has no isolation
    transistors at all and reports the baseline '11'.
    """
    if spec.p == spec.n and spec.q == spec.n:
        return CONFIG_11
    max_row = max(r for r, _ in assignment.cells)
    max_col = max(c for _, c in assignment.cells)
    candidates = []
    for config in legal_configurations(spec):
        rows, cols = config_dimensions(config, spec)
        if max_row < rows and max_col < cols:
            weight = static_energy_weight(config, spec)
            candidates.append((weight, config.wl_iso_ctrl + config.bl_iso_ctrl, config))
    candidates.sort(key=lambda t: t[:2])
    return candidates[0][2]


def _build(crossbar_id, cluster, spec, assignment, config) -> CrossbarPlacement:
    placed = tuple(
        PlacedSynapse(pre=cluster.pre_neurons[s.pre], post=cluster.post_neurons[s.post],
                      state=s.state, row=cell[0], col=cell[1])
        for s, cell in zip(cluster.synapses, assignment.cells)
    )
    return CrossbarPlacement(crossbar_id=crossbar_id, cluster_id=cluster.id, spec=spec,
                             config=config, row_of_pre=dict(assignment.row_of_pre),
                             col_of_post=dict(assignment.col_of_post), synapses=placed)


def map_network(network: Network, hardware: Hardware) -> Placement:
    """Map clusters to crossbars, first-fit in descending synapse count."""
    if len(network.clusters) > hardware.crossbar_count:
        raise CapacityExceeded(f"{len(network.clusters)} clusters > {hardware.crossbar_count} crossbars")
    order = sorted(network.clusters, key=lambda c: (-len(c.synapses), c.id))
    crossbars = []
    for crossbar_id, cluster in enumerate(order):
        assignment = assign_cluster(cluster, hardware.spec)
        config = select_configuration(assignment, hardware.spec)
        crossbars.append(_build(crossbar_id, cluster, hardware.spec, assignment, config))
    return Placement(crossbars=tuple(crossbars), crossbar_count=hardware.crossbar_count,
                     routes=network.routes)


def map_network_control(network: Network, hardware: Hardware, seed: int = 0) -> Placement:
    """Control mapper: input-order neurons on shuffled rows/columns.

    State-unaware, so it is only valid on specs without resistance regions
    (N_h = N_l = 0); it still picks the cheapest containing configuration.
    """
    spec = hardware.spec
    if spec.n_h or spec.n_l:
        raise ValidationError("control mapper ignores regions; use a spec with N_h = N_l = 0")
    if len(network.clusters) > hardware.crossbar_count:
        raise CapacityExceeded(f"{len(network.clusters)} clusters > {hardware.crossbar_count} crossbars")
    rng = np.random.default_rng(seed)
    order = sorted(network.clusters, key=lambda c: (-len(c.synapses), c.id))
    crossbars = []
    for crossbar_id, cluster in enumerate(order):
        n_pre, n_post = len(cluster.pre_neurons), len(cluster.post_neurons)
        if n_pre > spec.n or n_post > spec.n:
            raise Infeasible(f"cluster {cluster.id} exceeds crossbar", cluster_id=cluster.id)
        row_slots = rng.permutation(spec.n)[:n_pre]
        col_slots = rng.permutation(spec.n)[:n_post]
        assignment = Assignment(
            row_of_pre={nid: int(row_slots[i]) for i, nid in enumerate(cluster.pre_neurons)},
            col_of_post={nid: int(col_slots[j]) for j, nid in enumerate(cluster.post_neurons)},
            cells=tuple((int(row_slots[s.pre]), int(col_slots[s.post])) for s in cluster.synapses),
        )
        config = select_configuration(assignment, spec)
        crossbars.append(_build(crossbar_id, cluster, spec, assignment, config))
    return Placement(crossbars=tuple(crossbars), crossbar_count=hardware.crossbar_count,
                     routes=network.routes)


def check_placement(placement: Placement) -> list[str]:
    """Independent soundness audit; returns human-readable problems (empty = sound)."""
    problems = []
    for xb in placement.crossbars:
        rows, cols = config_dimensions(xb.config, xb.spec)
        cells = [(s.row, s.col) for s in xb.synapses]
        if len(set(cells)) != len(cells):
            problems.append(f"crossbar {xb.crossbar_id}: synapse cells not injective")
        for s in xb.synapses:
            if xb.row_of_pre.get(s.pre) != s.row or xb.col_of_post.get(s.post) != s.col:
                problems.append(f"crossbar {xb.crossbar_id}: cell ({s.row},{s.col}) inconsistent with neuron maps")
            if not (0 <= s.row < rows and 0 <= s.col < cols):
                problems.append(f"crossbar {xb.crossbar_id}: cell ({s.row},{s.col}) outside config '{xb.config.name}'")
            if not permits(s.row, s.col, s.state, xb.spec):
                problems.append(f"crossbar {xb.crossbar_id}: state {s.state} forbidden at ({s.row},{s.col})")
    return problems


# ---------------------------------------------------------------------------
# serialization


def placement_to_json(placement: Placement) -> dict:
    return {
        "crossbar_count": placement.crossbar_count,
        "crossbars": [
            {
                "id": xb.crossbar_id,
                "cluster": xb.cluster_id,
                "spec": xb.spec.to_json(),
                "config": xb.config.name,
                "rows": {str(k): v for k, v in sorted(xb.row_of_pre.items())},
                "cols": {str(k): v for k, v in sorted(xb.col_of_post.items())},
                "synapses": [
                    {"pre": s.pre, "post": s.post, "state": s.state, "row": s.row, "col": s.col}
                    for s in xb.synapses
                ],
                "stats": {"m": xb.m, "n_hrs": xb.n_hrs},
            }
            for xb in placement.crossbars
        ],
        "routes": [
            {"src_cluster": r.src_cluster, "src_neuron": r.src_neuron,
             "dst_cluster": r.dst_cluster, "dst_neuron": r.dst_neuron, "hops": r.hops}
            for r in placement.routes
        ],
    }


def placement_from_json(doc: dict) -> Placement:
    try:
        crossbars = tuple(
            CrossbarPlacement(
                crossbar_id=int(x["id"]),
                cluster_id=int(x["cluster"]),
                spec=CrossbarSpec.from_json(x["spec"]),
                config=config_by_name(x["config"]),
                row_of_pre={int(k): int(v) for k, v in x["rows"].items()},
                col_of_post={int(k): int(v) for k, v in x["cols"].items()},
                synapses=tuple(
                    PlacedSynapse(int(s["pre"]), int(s["post"]), str(s["state"]), int(s["row"]), int(s["col"]))
                    for s in x["synapses"]
                ),
            )
            for x in doc["crossbars"]
        )
        routes = tuple(
            Route(int(r["src_cluster"]), int(r["src_neuron"]),
                  int(r["dst_cluster"]), int(r["dst_neuron"]), int(r["hops"]))
            for r in doc.get("routes", ())
        )
        return Placement(crossbars=crossbars, crossbar_count=int(doc["crossbar_count"]), routes=routes)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad placement document: {exc}") from exc


def load_placement(path) -> Placement:
    with open(path) as fh:
        return placement_from_json(json.load(fh))


def save_placement(placement: Placement, path) -> None:
    with open(path, "w") as fh:
        json.dump(placement_to_json(placement), fh, indent=2, sort_keys=True)
        fh.write("\n")
