"""Independent oracle for frozen expected values in the C++ tests.

Uses networkx and plain enumeration only; shares no code with the library.
Run: python3 tests/oracle/figure1_values.py
"""
import itertools
import networkx as nx

FIG1 = [(5, 13), (13, 7), (7, 6), (6, 8), (8, 4), (4, 12), (12, 11), (11, 5),
        (5, 1), (1, 10), (10, 9), (9, 2), (2, 3), (3, 5), (12, 2), (7, 8)]
N = 13


def digraph(arcs, n=N):
    g = nx.DiGraph()
    g.add_nodes_from(range(1, n + 1))
    g.add_edges_from(arcs)
    return g


def strongly_biconnected(arcs, n=N):
    g = digraph(arcs, n)
    if not nx.is_strongly_connected(g):
        return False
    u = g.to_undirected()
    return nx.is_connected(u) and not list(nx.articulation_points(u))


def min_subset(items, pred, lo):
    for k in range(lo, len(items) + 1):
        for c in itertools.combinations(range(len(items)), k):
            if pred([items[i] for i in c]):
                return k, c
    return None


fig_b = [a for a in FIG1 if a not in [(12, 2), (7, 8)]]
fig_c = [a for a in FIG1 if a != (7, 8)]
print("underlying edges:", digraph(FIG1).to_undirected().number_of_edges())
print("AP of (b):", sorted(nx.articulation_points(digraph(fig_b).to_undirected())))
minus = [a for a in fig_b if a != (3, 5)]
print("SCC of (b)-3->5:", sorted(sorted(c) for c in nx.strongly_connected_components(digraph(minus))))
print("(c) SB:", strongly_biconnected(fig_c))
sap = []
for v in range(1, N + 1):
    g = digraph(fig_c)
    g.remove_node(v)
    if not nx.is_strongly_connected(g):
        sap.append(v)
print("strong APs of (c):", sap)
print("(c) minus any arc SB:", [strongly_biconnected([x for x in fig_c if x != a]) for a in fig_c])

h = min_subset(FIG1, strongly_biconnected, N)
print("h:", h[0], "witness idx", h[1])
i = min_subset(FIG1, lambda s: nx.is_strongly_connected(digraph(s)), N)
print("i:", i[0], "witness idx", i[1])
und = sorted({tuple(sorted(a)) for a in FIG1})


def biconn(edges, n=N):
    u = nx.Graph()
    u.add_nodes_from(range(1, n + 1))
    u.add_edges_from(edges)
    return nx.is_connected(u) and not list(nx.articulation_points(u))


s = min_subset(und, biconn, N)
print("s:", s[0])
k4 = list(itertools.combinations(range(1, 5), 2))
print("K4 2vcss:", min_subset(k4, lambda e: biconn(e, 4), 3)[0])
bt = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)]
print("bidirected triangle mscss:",
      min_subset(bt, lambda s: nx.is_strongly_connected(digraph(s, 3)), 3)[0])


# Trace of the tree-union construction with root label 5 (DFS, arcs in index order).
def dfs_tree(arcs, root):
    out = {v: [] for v in range(1, N + 1)}
    for idx, (t, h_) in enumerate(arcs):
        out[t].append((idx, h_))
    seen, tree = {root}, []

    def go(v):
        for idx, w in out[v]:
            if w not in seen:
                seen.add(w)
                tree.append(idx)
                go(w)
    go(root)
    return tree


t_out = dfs_tree(FIG1, 5)
t_in = dfs_tree([(b, a) for a, b in FIG1], 5)
ev = set(t_out) | set(t_in)
print("out-tree size", len(t_out), "in-tree size", len(t_in), "union", len(ev))
added = []
while True:
    u = nx.Graph()
    u.add_nodes_from(range(1, N + 1))
    u.add_edges_from(FIG1[i] for i in ev)
    blocks = [set(b) for b in nx.biconnected_components(u)]
    if not list(nx.articulation_points(u)):
        break
    for idx, (a, b) in enumerate(FIG1):
        if idx in ev:
            continue
        if not any(a in B and b in B for B in blocks):
            ev.add(idx)
            added.append(idx)
            break
print("alg root 5: size", len(ev), "added", added)

# Greedy minimalization, descending index.
cur = list(range(len(FIG1)))
for idx in reversed(range(len(FIG1))):
    trial = [j for j in cur if j != idx]
    if strongly_biconnected([FIG1[j] for j in trial]):
        cur = trial
print("minimalize size", len(cur), "removed", sorted(set(range(16)) - set(cur)))
