"""Randomized structural properties over the catalog and the extra groups."""

import json

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cayleyham.cli import build_report
from cayleyham.export import dumps
from cayleyham.groups import Permutation, free_reduce, parse_presentation, str_to_word, word_to_str
from cayleyham.hamilton import CYCLE, NEAR_CYCLE, PATH, HamiltonCertificate, boundary, tree_from_faces, \
    verify_certificate
from cayleyham.invariants import jaeger_audit

from conftest import ALL_NAMES, group_and_s, solved

names = st.sampled_from(ALL_NAMES)
SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def perms(n):
    return st.permutations(range(n)).map(lambda p: Permutation(tuple(p)))


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(perms(n), perms(n), perms(n))))
def test_permutation_group_laws(triple):
    p, q, r = triple
    assert (p * q) * r == p * (q * r)
    assert (p * q).inverse() == q.inverse() * p.inverse()
    assert (p * p.inverse()).is_identity()


@given(names, st.data())
@SETTINGS
def test_multiplication_table(name, data):
    G, _ = group_and_s(name)
    x, y, z = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    assert G.mul(x, G.inv[x]) == 0 == G.mul(0, 0)
    assert G.evaluate(G.element_words[x]) == x


relator_words = st.text("abAB", min_size=1, max_size=6).filter(lambda w: free_reduce(str_to_word(w)))


@given(st.integers(3, 9), st.lists(relator_words, max_size=3))
def test_presentation_round_trip(s, extra):
    text = f"a^2 = b^{s} = (a*b)^3 = 1" + "".join(f"; {'*'.join(w)} = 1" for w in extra)
    pres = parse_presentation(text)
    again = parse_presentation(str(pres))
    assert again.s == s
    assert [word_to_str(w) for w in again.relators] == [word_to_str(w) for w in pres.relators]


@given(names)
@SETTINGS
def test_face_and_hex_counts(name):
    r = solved(name)
    n = r.X.n
    for v in range(n):
        assert sum(v in f.vertices for f in r.hexagons) == 2
        assert sum(v in f.vertices for f in r.sgons) == 1
    assert r.hex_cosets.n == n // 3 and r.hex_cosets.graph.m == n // 2
    assert r.hex_faces.n == n // 3 and r.hex_faces.graph.m == n // 2


@given(names, st.data())
@SETTINGS
def test_random_hexagon_trees_obey_boundary_law(name, data):
    r = solved(name)
    h = r.hex_faces.graph
    start = data.draw(st.integers(0, h.n - 1))
    chosen = [start]
    for _ in range(data.draw(st.integers(0, h.n))):
        frontier = sorted({w for v in chosen for w in h.neighbors(v)} - set(chosen))
        candidates = [w for w in frontier if h.is_tree(chosen + [w])]
        if not candidates:
            break
        chosen.append(data.draw(st.sampled_from(candidates)))
    tree = tree_from_faces([r.hexagons[i] for i in chosen])
    cyc = boundary(tree)
    assert len(cyc) == 4 * len(chosen) + 2 == len(set(cyc.vertices))


@given(names, st.data())
@SETTINGS
def test_jaeger_identity_on_random_forests(name, data):
    h = solved(name).hex_cosets.graph
    order = data.draw(st.permutations(range(h.n)))
    S = []
    for v in order:
        if h.is_forest(S + [v]):
            S.append(v)
    audit = jaeger_audit(h, S)
    assert audit.identity_holds
    assert 2 * (audit.e + 2 * audit.size + audit.c) == 3 * h.n


def naive_check(adj, cert):
    vs = cert.vertices
    n = len(adj)
    if any(not 0 <= v < n for v in vs) or len(set(vs)) != len(vs):
        return False
    steps = list(zip(vs, vs[1:]))
    if cert.kind != PATH:
        steps.append((vs[-1], vs[0]))
    if any(b not in adj[a] for a, b in steps):
        return False
    if cert.kind == NEAR_CYCLE:
        u, v = cert.missed
        rest = set(range(n)) - set(vs)
        return len(vs) == n - 2 and rest == {u, v} and v in adj[u] \
            and bool(adj[u] & set(vs)) and bool(adj[v] & set(vs))
    return len(vs) == n


@given(names, st.data())
@SETTINGS
def test_verifier_agrees_with_naive_check_on_mutations(name, data):
    r = solved(name)
    adj = [set(r.X.neighbors(v)) for v in range(r.X.n)]
    cert = data.draw(st.sampled_from(r.certificates()))
    vs = list(cert.vertices)
    i, j = data.draw(st.integers(0, len(vs) - 1)), data.draw(st.integers(0, len(vs) - 1))
    if data.draw(st.booleans()):
        vs[i], vs[j] = vs[j], vs[i]
    else:
        vs[i] = data.draw(st.integers(0, r.X.n - 1))
    mutated = HamiltonCertificate(cert.kind, tuple(vs), cert.missed)
    assert verify_certificate(r.X, mutated).ok == naive_check(adj, mutated)


@given(names)
@SETTINGS
def test_every_certificate_verifies(name):
    r = solved(name)
    for cert in r.certificates():
        assert verify_certificate(r.X, cert).ok
        assert cert.kind in (CYCLE, NEAR_CYCLE, PATH)


@given(names)
@settings(max_examples=10, deadline=None)
def test_reports_are_byte_identical(name):
    from cayleyham.hamilton import solve_theorem
    G, s = group_and_s(name)
    first = dumps(build_report(solve_theorem(G, s, augment=True), {"name": name}))
    second = dumps(build_report(solve_theorem(G, s, augment=True), {"name": name}))
    assert first == second
    json.loads(first)
