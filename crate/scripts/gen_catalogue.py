#!/usr/bin/env python3
"""Generate the default finite-group catalogue (all groups of order <= N).

Every group of order <= 24 is solvable, so each one has a normal subgroup of
prime index. Groups of order n are therefore built as cyclic extensions
N.C_p of the groups of order n/p, deduplicated up to isomorphism, and
written out as transitive permutation groups of minimal degree.

Usage: gen_catalogue.py [max_order] > crates/core/data/groups_le24.txt
"""

import itertools
import sys

# Number of isomorphism classes of groups of order n (OEIS A000001).
KNOWN_COUNTS = [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15]


class Group:
    def __init__(self, table):
        self.n = len(table)
        self.t = table
        self.inv = [0] * self.n
        for x in range(self.n):
            for y in range(self.n):
                if table[x][y] == 0:
                    self.inv[x] = y
        self.orders = [self._order(x) for x in range(self.n)]

    def mul(self, x, y):
        return self.t[x][y]

    def _order(self, x):
        k, y = 1, x
        while y != 0:
            y = self.t[y][x]
            k += 1
            if k > self.n:
                raise ValueError("table is not a group")
        return k

    def closure(self, gens):
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.t[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generators(self):
        """Greedy small generating set, preferring elements of large order."""
        gens = []
        span = {0}
        for x in sorted(range(self.n), key=lambda x: (-self.orders[x], x)):
            if x not in span:
                gens.append(x)
                span = self.closure(gens)
                if len(span) == self.n:
                    break
        return gens

    def words(self, gens):
        """Map each element to a word (list of generator positions)."""
        words = {0: []}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for i, g in enumerate(gens):
                    y = self.t[x][g]
                    if y not in words:
                        words[y] = words[x] + [i]
                        nxt.append(y)
            frontier = nxt
        return words

    def is_abelian(self):
        return all(self.t[x][y] == self.t[y][x] for x in range(self.n) for y in range(self.n))

    def invariants(self):
        order_counts = tuple(sorted(self.orders))
        centre = sum(1 for x in range(self.n) if all(self.t[x][y] == self.t[y][x] for y in range(self.n)))
        commuting = sum(1 for x in range(self.n) for y in range(self.n) if self.t[x][y] == self.t[y][x])
        comms = {self.t[self.t[x][y]][self.inv[self.t[y][x]]] for x in range(self.n) for y in range(self.n)}
        derived = len(self.closure(list(comms)))
        squares = len({self.t[x][x] for x in range(self.n)})
        return (order_counts, centre, commuting, derived, squares)


def extend_map(G, gens, words, images, H):
    """Extend generator images to a map G -> H; None if not a bijective hom."""
    phi = [0] * G.n
    for x, w in words.items():
        y = 0
        for i in w:
            y = H.t[y][images[i]]
        phi[x] = y
    if len(set(phi)) != G.n:
        return None
    for x in range(G.n):
        for y in range(G.n):
            if phi[G.t[x][y]] != H.t[phi[x]][phi[y]]:
                return None
    return phi


def isomorphic(G, H):
    if G.n != H.n:
        return False
    if G.invariants() != H.invariants():
        return False
    if G.is_abelian():
        return True  # element-order statistics determine finite abelian groups
    gens = G.generators()
    words = G.words(gens)
    candidates = [[y for y in range(H.n) if H.orders[y] == G.orders[g]] for g in gens]
    for images in itertools.product(*candidates):
        if extend_map(G, gens, words, images, H) is not None:
            return True
    return False


def automorphisms(N):
    gens = N.generators()
    words = N.words(gens)
    candidates = [[y for y in range(N.n) if N.orders[y] == N.orders[g]] for g in gens]
    auts = []
    for images in itertools.product(*candidates):
        phi = extend_map(N, gens, words, images, N)
        if phi is not None:
            auts.append(phi)
    return auts


def cyclic_extensions(N, p):
    """All groups G with a normal subgroup N and G/N cyclic of order p."""
    m = N.n
    out = []
    for phi in automorphisms(N):
        # phi^p
        powers = [list(range(m))]
        for _ in range(p):
            powers.append([phi[x] for x in powers[-1]])
        phip = powers[p]
        for z in range(m):
            if phi[z] != z:
                continue
            zi = N.inv[z]
            if any(phip[x] != N.t[N.t[z][x]][zi] for x in range(m)):
                continue
            n = m * p
            table = [[0] * n for _ in range(n)]
            for i in range(p):
                for x in range(m):
                    for j in range(p):
                        for y in range(m):
                            prod = N.t[x][powers[i][y]]
                            if i + j >= p:
                                prod = N.t[prod][z]
                            table[i * m + x][j * m + y] = prod + ((i + j) % p) * m
            out.append(Group(table))
    return out


def cyclic(n):
    return Group([[(x + y) % n for y in range(n)] for x in range(n)])


def primes_dividing(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % d for d in range(2, p))]


def enumerate_groups(max_order):
    by_order = {1: [cyclic(1)]}
    for n in range(2, max_order + 1):
        found = []
        for p in primes_dividing(n):
            for N in by_order[n // p]:
                for G in cyclic_extensions(N, p):
                    if not any(isomorphic(G, H) for H in found):
                        found.append(G)
        if len(found) != KNOWN_COUNTS[n]:
            raise SystemExit(f"order {n}: found {len(found)} groups, expected {KNOWN_COUNTS[n]}")
        by_order[n] = found
    return by_order


def abelian_invariants(G):
    """Invariant factors of an abelian group from its element orders."""
    # count elements with x^{q} = 1 for each prime power q
    n = G.n
    factors = []
    primes = primes_dividing(n)
    parts = {}
    for p in primes:
        # p-primary part: partition from counts of elements killed by p^k
        k = 0
        sizes = []
        while True:
            k += 1
            cnt = sum(1 for x in range(n) if p ** k % G.orders[x] == 0)
            sizes.append(cnt)
            if k > 1 and sizes[-1] == sizes[-2]:
                break
        # number of cyclic factors of order >= p^k is log_p(sizes[k-1]/sizes[k-2])
        logs = []
        prev = 1
        for s in sizes:
            e = 0
            r = s // prev
            while r > 1:
                r //= p
                e += 1
            logs.append(e)
            prev = s
        exps = []
        for k in range(len(logs)):
            ge_k = logs[k]
            ge_k1 = logs[k + 1] if k + 1 < len(logs) else 0
            exps += [k + 1] * (ge_k - ge_k1)
        parts[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in parts.values()), default=0)
    for i in range(width):
        d = 1
        for p, exps in parts.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    return sorted(factors)


def name_of(G, counter):
    n = G.n
    if n == 1:
        return "C1"
    if G.is_abelian():
        return "x".join(f"C{d}" for d in abelian_invariants(G))
    invols = sum(1 for x in range(n) if G.orders[x] == 2)
    max_order = max(G.orders)
    if max_order == n // 2 and n >= 6:
        cyc = [x for x in range(n) if G.orders[x] == n // 2][0]
        sub = G.closure([cyc])
        outside = [x for x in range(n) if x not in sub]
        if all(G.orders[x] == 2 for x in outside):
            return "S3" if n == 6 else f"D{n}"
        if all(G.orders[x] == 4 for x in outside):
            return "Q8" if n == 8 else f"Dic{n}"
    if n == 12 and max_order == 3:
        return "A4"
    if n == 24 and max_order == 4 and invols == 9:
        return "S4"
    if n == 24 and invols == 1 and max_order == 6:
        return "SL(2,3)"
    counter[n] = counter.get(n, 0) + 1
    return f"G{n}_{counter[n]}"


def cycle_notation(perm):
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(cycles) if cycles else "()"


def minimal_action(G):
    """Coset action on a core-free subgroup of largest order (smallest degree)."""
    subgroups = set()
    for x in range(G.n):
        subgroups.add(frozenset(G.closure([x])))
    for x, y in itertools.combinations(range(G.n), 2):
        subgroups.add(frozenset(G.closure([x, y])))
    best = frozenset([0])
    for H in subgroups:
        if len(H) <= len(best) or len(H) == G.n:
            continue
        core = set(H)
        for g in range(G.n):
            conj = {G.t[G.t[g][h]][G.inv[g]] for h in H}
            core &= conj
        if core == {0}:
            best = H
    # left cosets gH
    cosets = []
    index_of = {}
    for g in range(G.n):
        if g in index_of:
            continue
        coset = frozenset(G.t[g][h] for h in best)
        for c in coset:
            index_of[c] = len(cosets)
        cosets.append(g)
    gens = G.generators()
    perms = []
    for s in gens:
        perms.append([index_of[G.t[s][g]] for g in cosets])
    return len(cosets), perms


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    groups = enumerate_groups(max_order)
    print(f"# All {sum(len(v) for v in groups.values())} groups of order <= {max_order}, one per isomorphism class.")
    print("# Generated by scripts/gen_catalogue.py; transitive actions of minimal degree.")
    print("# name; degree; generators")
    counter = {}
    for n in range(1, max_order + 1):
        print(f"# order {n}")
        for G in groups[n]:
            name = name_of(G, counter)
            degree, perms = minimal_action(G)
            gens = ", ".join(cycle_notation(p) for p in perms) if perms else "()"
            print(f"{name}; {degree}; {gens}")


if __name__ == "__main__":
    main()
