"""Linear-time SAT kernels for Horn CNF and 2-CNF."""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Sequence


def horn_sat(clauses: Iterable[Iterable[int]]) -> set[int] | None:
    """Minimal model of a Horn CNF (at most one positive literal per clause).

    Returns the set of variables forced true, or None when unit propagation
    derives the empty clause. Each clause is visited once per body variable,
    so the cost is linear in the formula size.
    """
    heads: list[int | None] = []
    pending: list[int] = []
    occurs: dict[int, list[int]] = defaultdict(list)
    queue: list[int] = []
    for i, clause in enumerate(clauses):
        head = None
        body = 0
        for lit in clause:
            if lit > 0:
                if head is not None:
                    raise ValueError(f"clause {i} is not Horn")
                head = lit
            else:
                body += 1
                occurs[-lit].append(i)
        heads.append(head)
        pending.append(body)
        if body == 0:
            if head is None:
                return None
            queue.append(head)

    true: set[int] = set()
    while queue:
        v = queue.pop()
        if v in true:
            continue
        true.add(v)
        for i in occurs.get(v, ()):
            pending[i] -= 1
            if pending[i] == 0:
                h = heads[i]
                if h is None:
                    return None
                if h not in true:
                    queue.append(h)
    return true


def _vertex(lit: int) -> int:
    # negative literal of x_v gets the lower id so DFS roots prefer "false"
    return 2 * (abs(lit) - 1) + (1 if lit > 0 else 0)


def _tarjan(num_vertices: int, adj: Sequence[list[int]]) -> list[int]:
    """Component id per vertex; ids are assigned in reverse topological order."""
    index = [-1] * num_vertices
    low = [0] * num_vertices
    comp = [-1] * num_vertices
    on_stack = [False] * num_vertices
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(num_vertices):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                w = adj[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def two_sat(n: int, clauses: Iterable[Iterable[int]]) -> dict[int, bool] | None:
    """Decide a 2-CNF over x1..xn with the implication graph.

    Unsatisfiable iff some variable shares a strongly connected component with
    its negation. The model sets x true when its component comes later in
    topological order than that of not-x.
    """
    adj: list[list[int]] = [[] for _ in range(2 * n)]
    for clause in clauses:
        lits = list(clause)
        if not lits:
            return None
        if len(lits) == 1:
            lits = lits * 2
        if len(lits) != 2:
            raise ValueError(f"clause {lits} has more than two literals")
        a, b = lits
        adj[_vertex(-a)].append(_vertex(b))
        adj[_vertex(-b)].append(_vertex(a))
    comp = _tarjan(2 * n, adj)
    model = {}
    for v in range(1, n + 1):
        pos, neg = comp[_vertex(v)], comp[_vertex(-v)]
        if pos == neg:
            return None
        model[v] = pos < neg
    return model
