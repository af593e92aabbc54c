"""Search and counting of distinguishing colourings under a permutation action.

A colouring ``c`` of positions ``0..N-1`` is preserved by an action row ``a``
when ``c[a[i]] == c[i]`` for all ``i``. Colourings are assigned position by
position while a set of live rows (those not yet broken by the prefix) is
maintained. Assigning position ``p`` decides the pairs ``(p, a[p])`` and
``(a^-1[p], p)`` of every row, so each step costs two comparisons per live
row. A live row whose largest moved position is decided preserves every
extension and cuts the subtree; once no row is live, every completion is
distinguishing and the subtree is counted in closed form.

Two interchangeable backends implement the search: a numba depth-first
kernel and a numpy breadth-first frontier. ``exhaustive_search`` is the
unpruned reference that scans every colouring.
"""

from __future__ import annotations

import numpy as np

from ._accel import njit, resolve_backend

FRONTIER_CELLS = 1 << 16
EXHAUSTIVE_CELLS = 1 << 24
COUNT_LIMIT = 1 << 62


class SearchBudgetExceeded(RuntimeError):
    pass


def prepare_actions(acts: np.ndarray) -> tuple[np.ndarray, bool]:
    """Drop identity rows; report whether a nontrivial element acted trivially.

    ``acts`` holds one row per group element (identity included). When the
    action is not faithful some nontrivial element preserves every
    colouring, so no distinguishing colouring exists.
    """
    acts = np.asarray(acts, dtype=np.int64)
    if acts.ndim != 2:
        raise ValueError("acts must be 2-dimensional")
    n_pos = acts.shape[1]
    ident = np.arange(n_pos, dtype=np.int64)
    moving = (acts != ident).any(axis=1)
    unfaithful = int((~moving).sum()) > 1
    return np.ascontiguousarray(acts[moving]), unfaithful


def _row_tables(acts: np.ndarray):
    """Inverse rows and the largest moved position of each row."""
    n_rows, n_pos = acts.shape
    inv = np.empty_like(acts)
    np.put_along_axis(inv, acts, np.broadcast_to(np.arange(n_pos), acts.shape), axis=1)
    moved = acts != np.arange(n_pos)
    last = n_pos - 1 - np.argmax(moved[:, ::-1], axis=1)
    return np.ascontiguousarray(inv), last.astype(np.int64)


def completion_table(n_pos: int, k: int, rgs: bool) -> np.ndarray:
    """``T[r, m]``: completions of ``r`` free positions when ``m`` colours are in use.

    Without restricted growth ``m`` is ignored and ``T[r, m] = k**r``.
    """
    t = np.zeros((n_pos + 1, k + 2), dtype=np.int64)
    t[0, :] = 1
    for r in range(1, n_pos + 1):
        for m in range(k + 1):
            if rgs:
                t[r, m] = m * t[r - 1, m] + (t[r - 1, m + 1] if m < k else 0)
            else:
                t[r, m] = k * t[r - 1, m]
    return t


@njit(cache=True)
def _dfs_kernel(n_pos, k, acts, inv, last, table, rgs, first_only, out):
    n_rows = acts.shape[0]
    c = np.full(n_pos, -1, dtype=np.int64)
    maxc = np.full(n_pos + 1, -1, dtype=np.int64)
    live = np.arange(n_rows)
    n_live = np.zeros(n_pos + 1, dtype=np.int64)
    n_live[0] = n_rows
    count = 0
    pos = 0
    while pos >= 0:
        c[pos] += 1
        limit = k - 1
        if rgs and maxc[pos] + 1 < limit:
            limit = maxc[pos] + 1
        if c[pos] > limit:
            c[pos] = -1
            pos -= 1
            continue
        # partition live rows: survivors stay in front, broken ones move past n
        n = n_live[pos]
        idx = 0
        cut = False
        while idx < n:
            g = live[idx]
            a = acts[g, pos]
            b = inv[g, pos]
            broken = (a < pos and c[a] != c[pos]) or (b < pos and c[b] != c[pos])
            if broken:
                n -= 1
                live[idx] = live[n]
                live[n] = g
            else:
                if last[g] <= pos:
                    cut = True
                    break
                idx += 1
        if cut:
            continue
        used = maxc[pos] + 1 if maxc[pos] >= c[pos] else c[pos] + 1
        if n == 0:
            if first_only:
                for i in range(n_pos):
                    out[i] = c[i] if i <= pos else 0
                return 1
            count += table[n_pos - 1 - pos, used]
            continue
        # n > 0 at the last position would have been cut above
        n_live[pos + 1] = n
        maxc[pos + 1] = used - 1
        pos += 1
    return count


def _frontier_numpy(n_pos, k, acts, inv, last, table, rgs, first_only):
    colours = np.arange(k, dtype=np.int8)

    def expand(frontier, alive, a_tab, b_tab, last_tab, pos):
        # keep only the rows still live somewhere in this frontier
        cols = alive.any(axis=0)
        if not cols.all():
            alive, a_tab, b_tab, last_tab = alive[:, cols], a_tab[cols], b_tab[cols], last_tab[cols]
        m = len(frontier)
        new = np.empty((m * k, pos + 1), dtype=np.int8)
        new[:, :pos] = np.repeat(frontier, k, axis=0)
        new[:, pos] = np.tile(colours, m)
        live = np.repeat(alive, k, axis=0)
        keep = np.ones(m * k, dtype=bool)
        prev = frontier.max(axis=1).astype(np.int64) if pos else np.full(m, -1, dtype=np.int64)
        prev = np.repeat(prev, k)
        if rgs:
            keep &= new[:, pos] <= prev + 1
        a, b = a_tab[:, pos], b_tab[:, pos]
        cur = new[:, pos][:, None]
        ok_a, ok_b = a < pos, b < pos
        if ok_a.any():
            live[:, ok_a] &= new[:, a[ok_a]] == cur
        if ok_b.any():
            live[:, ok_b] &= new[:, b[ok_b]] == cur
        keep &= ~(live & (last_tab <= pos)).any(axis=1)
        done = keep & ~live.any(axis=1)
        total = 0
        if first_only:
            # rows are in lexicographic order: a finished row with no open row
            # before it completes (with zeros) to the first distinguishing colouring
            hits = np.nonzero(done)[0]
            if len(hits) and not (keep & ~done)[:hits[0]].any():
                row = np.zeros(n_pos, dtype=np.int8)
                row[:pos + 1] = new[hits[0]]
                return 1, row
        else:
            used = np.maximum(prev, new[:, pos].astype(np.int64)) + 1
            total += int(table[n_pos - 1 - pos, used[done]].sum())
            keep &= ~done
        if pos == n_pos - 1:
            return total, None
        nxt = np.nonzero(keep)[0]
        chunk = max(1, FRONTIER_CELLS // max(live.shape[1] + n_pos, 1) // k)
        for s in range(0, len(nxt), chunk):
            sel = nxt[s:s + chunk]
            cnt, f = expand(new[sel], live[sel], a_tab, b_tab, last_tab, pos + 1)
            if f is not None:
                return 1, f
            total += cnt
        return total, None

    start = np.ones((1, acts.shape[0]), dtype=bool)
    return expand(np.zeros((1, 0), dtype=np.int8), start, acts, inv, last, 0)


def colouring_search(acts: np.ndarray, k: int, *, first_only: bool = False,
                     restricted_growth: bool = False,
                     backend: str | None = None) -> tuple[int, np.ndarray | None]:
    """Count distinguishing ``k``-colourings, or find the lexicographically first.

    ``acts`` contains the action rows of every group element. With
    ``restricted_growth`` only colourings whose colours first appear in
    increasing order are visited (one per relabelling of the colour set).
    Returns ``(count, first)``; with ``first_only`` the count is 0 or 1.
    """
    acts, unfaithful = prepare_actions(acts)
    n_pos = acts.shape[1]
    if unfaithful or k < 1:
        return 0, None
    if n_pos == 0:
        return (1, np.zeros(0, dtype=np.int64)) if len(acts) == 0 else (0, None)
    if k > 127:
        raise ValueError("at most 127 colours are supported")
    if not first_only and k ** n_pos >= COUNT_LIMIT:
        raise SearchBudgetExceeded(f"{k}**{n_pos} colourings overflow the 64-bit counter")
    inv, last = _row_tables(acts)
    table = completion_table(n_pos, k, restricted_growth)
    if resolve_backend(backend) == "numba":
        out = np.zeros(n_pos, dtype=np.int64)
        cnt = _dfs_kernel(n_pos, k, acts, inv, last, table, restricted_growth, first_only, out)
        if first_only:
            return int(cnt), (out if cnt else None)
        return int(cnt), None
    cnt, first = _frontier_numpy(n_pos, k, acts, inv, last, table, restricted_growth, first_only)
    if first_only:
        return int(first is not None), (first.astype(np.int64) if first is not None else None)
    return int(cnt), None


def exhaustive_search(acts: np.ndarray, k: int, *, first_only: bool = False,
                      max_colourings: int = 10**8) -> tuple[int, np.ndarray | None]:
    """Scan all ``k**N`` colourings in lexicographic order, no pruning."""
    acts, unfaithful = prepare_actions(acts)
    n_pos = acts.shape[1]
    if unfaithful or k < 1:
        return 0, None
    total = k ** n_pos
    if total > max_colourings:
        raise SearchBudgetExceeded(f"{k}**{n_pos} colourings exceed the exhaustive budget")
    weights = k ** np.arange(n_pos - 1, -1, -1, dtype=np.int64)
    batch = max(1, EXHAUSTIVE_CELLS // max(1, len(acts) * max(n_pos, 1)))
    count, first = 0, None
    for start in range(0, total, batch):
        idx = np.arange(start, min(total, start + batch), dtype=np.int64)
        cols = (idx[:, None] // weights[None, :]) % k
        ok = np.ones(len(idx), dtype=bool)
        for row in acts:
            ok &= ~(cols[:, row] == cols).all(axis=1)
        hits = np.nonzero(ok)[0]
        count += len(hits)
        if len(hits) and first is None:
            first = cols[hits[0]].astype(np.int64)
            if first_only:
                return 1, first
    return count, first
