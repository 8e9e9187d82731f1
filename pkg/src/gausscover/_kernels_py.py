"""Pure-Python kernels; the reference the compiled module must agree with."""


def chord_indices(esigns, tails, heads):
    """Index of each chord given endpoint signs and (tail, head) positions.

    With prefix sums S, Ind = S[head] - S[tail + 1] in both the nested and the
    wrapping case, because the endpoint signs of a diagram sum to zero.
    """
    prefix = [0]
    acc = 0
    for s in esigns:
        acc += s
        prefix.append(acc)
    return [prefix[h] - prefix[t + 1] for t, h in zip(tails, heads)]


def r1_positions(partner, circular):
    """Positions p such that p and its successor are the two ends of one chord."""
    n = len(partner)
    out = [p for p in range(n - 1) if partner[p] == p + 1]
    if circular and n >= 2 and partner[n - 1] == 0:
        out.append(n - 1)
    return out


def r2_blocks(partner, is_tail, csign, circular):
    """Block start pairs (p1, p2), p1 < p2, of opposite-sign bigon chord pairs."""
    n = len(partner)
    out = []
    last = n if circular else n - 1
    for p in range(last):
        q = p + 1 if p + 1 < n else 0
        if partner[p] == q or is_tail[p] != is_tail[q] or csign[p] != -csign[q]:
            continue
        pp, pq = partner[p], partner[q]
        if pq == pp + 1 or (circular and pp == n - 1 and pq == 0):
            other = pp
        elif pp == pq + 1 or (circular and pq == n - 1 and pp == 0):
            other = pq
        else:
            continue
        if p < other:
            out.append((p, other))
    return out
