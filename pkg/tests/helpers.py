"""Shared oracles and random-instance generators for the test suite.

Everything here is deliberately independent of the package internals: the
syndrome oracle works from a 4x4 anticommutation lookup table, the posterior
oracles enumerate the full error space, and the tree generators build the
bipartite graph explicitly.  Tests compare package output against these.
"""

from __future__ import annotations

import numpy as np

# ANTI[p, q] = 1 iff single-qubit Paulis p and q anticommute
# (codes 0=I, 1=X, 2=Y, 3=Z; distinct non-identity Paulis anticommute)
ANTI = np.array(
    [[0, 0, 0, 0],
     [0, 0, 1, 1],
     [0, 1, 0, 1],
     [0, 1, 1, 0]],
    dtype=np.uint8,
)


def syndrome_ref(rows: np.ndarray, err: np.ndarray) -> np.ndarray:
    """Reference syndrome: per-row count of anticommuting positions mod 2."""
    rows = np.atleast_2d(np.asarray(rows, dtype=np.uint8))
    return ANTI[rows, np.asarray(err, dtype=np.uint8)[None, :]].sum(axis=1) % 2


def enumerate_codes(n: int, radix: int) -> np.ndarray:
    """All radix**n length-n digit vectors, least-significant digit first."""
    idx = np.arange(radix**n)
    out = np.empty((idx.size, n), dtype=np.uint8)
    for q in range(n):
        out[:, q] = (idx // radix**q) % radix
    return out


def brute_posteriors4(rows: np.ndarray, syndrome: np.ndarray, priors: np.ndarray):
    """Exact per-qubit conditionals P(E_q = W | syndrome) by enumeration."""
    rows = np.atleast_2d(rows)
    n = rows.shape[1]
    all_codes = enumerate_codes(n, 4)
    match = np.ones(len(all_codes), dtype=bool)
    for r, z in zip(rows, syndrome):
        match &= (ANTI[r[None, :], all_codes].sum(axis=1) % 2) == z
    codes = all_codes[match]
    w = priors[np.arange(n)[None, :], codes].prod(axis=1)
    post = np.zeros((n, 4))
    for q in range(n):
        post[q] = np.bincount(codes[:, q], weights=w, minlength=4)
    return post / post.sum(axis=1, keepdims=True)


def brute_posteriors2(h: np.ndarray, syndrome: np.ndarray, priors: np.ndarray):
    """Exact per-bit conditionals P(e_q = b | syndrome) by enumeration."""
    h = np.atleast_2d(h)
    n = h.shape[1]
    vecs = enumerate_codes(n, 2)
    match = ((vecs @ h.T) % 2 == syndrome[None, :]).all(axis=1)
    vecs = vecs[match]
    w = priors[np.arange(n)[None, :], vecs].prod(axis=1)
    post = np.zeros((n, 2))
    for q in range(n):
        post[q] = np.bincount(vecs[:, q], weights=w, minlength=2)
    return post / post.sum(axis=1, keepdims=True)


def random_bipartite_tree(rng, n_vars: int, n_checks: int):
    """Random tree over variable/check nodes; returns (check, var) edges."""
    edges = [(0, 0)]
    vars_in, chks_in = 1, 1
    rest = ["v"] * (n_vars - 1) + ["c"] * (n_checks - 1)
    rng.shuffle(rest)
    for kind in rest:
        if kind == "v":
            edges.append((int(rng.integers(chks_in)), vars_in))
            vars_in += 1
        else:
            edges.append((chks_in, int(rng.integers(vars_in))))
            chks_in += 1
    return edges


def random_pauli_tree(rng, n_vars: int, n_checks: int) -> np.ndarray:
    """Random cycle-free stabilizer matrix (codes 0..3).

    On a tree two checks share at most one variable, so rows commute exactly
    when every variable's incident edges carry a single Pauli type.
    """
    mat = np.zeros((n_checks, n_vars), dtype=np.uint8)
    var_label = {}
    for c, v in random_bipartite_tree(rng, n_vars, n_checks):
        if v not in var_label:
            var_label[v] = int(rng.integers(1, 4))
        mat[c, v] = var_label[v]
    return mat


def random_binary_tree(rng, n_vars: int, n_checks: int) -> np.ndarray:
    mat = np.zeros((n_checks, n_vars), dtype=np.uint8)
    for c, v in random_bipartite_tree(rng, n_vars, n_checks):
        mat[c, v] = 1
    return mat


def tanner_diameter(mat: np.ndarray) -> int:
    """Diameter (in edges) of the bipartite graph of a matrix's support."""
    from collections import deque

    m, n = mat.shape
    adj: dict[tuple, list] = {}
    for c in range(m):
        for v in np.nonzero(mat[c])[0]:
            adj.setdefault(("c", c), []).append(("v", int(v)))
            adj.setdefault(("v", int(v)), []).append(("c", c))

    def bfs(start):
        dist = {start: 0}
        queue = deque([start])
        far, far_d = start, 0
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    if dist[w] > far_d:
                        far, far_d = w, dist[w]
                    queue.append(w)
        return far, far_d

    if not adj:
        return 0
    start = next(iter(adj))
    far, _ = bfs(start)
    _, diameter = bfs(far)
    return diameter


def random_commuting_rows(rng, n: int, m_target: int, max_tries: int = 400):
    """Rejection-sample pairwise-commuting Pauli rows (codes, no zero rows)."""
    rows: list[np.ndarray] = []
    for _ in range(max_tries):
        if len(rows) == m_target:
            break
        cand = rng.integers(0, 4, size=n).astype(np.uint8)
        if not cand.any():
            continue
        if all(int(ANTI[r, cand].sum()) % 2 == 0 for r in rows):
            rows.append(cand)
    return np.array(rows, dtype=np.uint8)


def codes_to_strings(rows: np.ndarray) -> list[str]:
    return ["".join("IXYZ"[int(p)] for p in row) for row in np.atleast_2d(rows)]
