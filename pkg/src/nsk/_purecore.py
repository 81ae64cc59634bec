"""Pure-Python kernels.

Same signatures and results as the compiled ``nsk._core`` module; used when
the extension is not built or when ``NSK_PURE=1`` is set.
"""


def membership_table(gens):
    """Return ``(table, conductor)`` for the semigroup generated by ``gens``.

    ``table[n]`` tells whether ``n`` is a member for ``0 <= n < conductor``.
    ``gens`` must be positive with gcd 1, otherwise this never terminates.
    """
    m = min(gens)
    table = [True]
    last_gap = -1
    n = 0
    while n - last_gap < m:
        n += 1
        member = False
        for a in gens:
            if a <= n and table[n - a]:
                member = True
                break
        table.append(member)
        if not member:
            last_gap = n
    return table[: last_gap + 1], last_gap + 1


def factorizations(gens, n):
    """All exponent vectors ``a >= 0`` with ``sum(a[j] * gens[j]) == n``, lex order."""
    r = len(gens)
    out = []
    cur = [0] * r

    def rec(i, rem):
        if i == r - 1:
            if rem % gens[i] == 0:
                cur[i] = rem // gens[i]
                out.append(tuple(cur))
            return
        for k in range(rem // gens[i] + 1):
            cur[i] = k
            rec(i + 1, rem - k * gens[i])
        cur[i] = 0

    if n < 0 or r == 0:
        return out
    rec(0, n)
    return out


def integer_rank(rows):
    """Rank over the rationals of an integer matrix, by fraction-free elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank
        while piv < nrows and m[piv][col] == 0:
            piv += 1
        if piv == nrows:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        prow = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def gap_sets_by_genus(g):
    """Gap sets of every numerical semigroup of genus ``g`` (unordered).

    Walks the semigroup tree: the children of S are S minus one of its
    minimal generators larger than the Frobenius number.
    """
    size = 3 * g + 3
    member = [True] * size
    out = []

    def visit(frob, mult, genus):
        if genus == g:
            out.append(tuple(n for n in range(1, frob + 1) if not member[n]))
            return
        for x in range(max(frob + 1, 1), max(frob + mult, mult) + 1):
            if not member[x]:
                continue
            minimal = True
            for a in range(mult, x // 2 + 1):
                if member[a] and member[x - a]:
                    minimal = False
                    break
            if not minimal:
                continue
            member[x] = False
            visit(x, x + 1 if x == mult else mult, genus + 1)
            member[x] = True

    visit(-1, 1, 0)
    return out


def factorization_components(gens, n):
    """Factorizations of ``n`` grouped into support-sharing components (unordered)."""
    facts = factorizations(gens, n)
    parent = list(range(len(facts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(len(gens)):
        first = -1
        for i, f in enumerate(facts):
            if f[j]:
                if first < 0:
                    first = i
                else:
                    parent[find(i)] = find(first)
    groups = {}
    for i, f in enumerate(facts):
        groups.setdefault(find(i), []).append(f)
    return list(groups.values())
