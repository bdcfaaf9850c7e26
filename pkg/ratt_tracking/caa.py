"""Communication attack approximation.

Worst-case edge removals tend to split the team evenly, so the size of
the largest surviving subgroup is estimated from the remaining edge count
and the robots outside it are treated as sensing-attacked.
"""
from .tracking_errors import BudgetExceeded
from .tracking_types import CaaResult


def edge_count(n):
    return n * (n - 1) // 2


def ebar(n_robots, n):
    """Most edges a team of n_robots can keep when no subgroup exceeds n:
    q = N // n full cliques of size n plus one clique of the r leftovers."""
    if not 1 <= n <= n_robots:
        raise ValueError('n must lie in [1, {}]'.format(n_robots))
    q = n_robots // n
    r = n_robots - n * q
    return q * edge_count(n) + edge_count(r)


def caa(n_robots, alpha_c):
    if n_robots < 1:
        raise ValueError('team needs at least one robot')
    if alpha_c < 0:
        raise ValueError('alpha_c must be non-negative')
    total = edge_count(n_robots)
    if alpha_c > total:
        raise BudgetExceeded(
            '{} communication attacks but only {} edges'.format(alpha_c, total))
    e_r = total - alpha_c
    table = [ebar(n_robots, n) for n in range(1, n_robots + 1)]
    n_max = next(n for n, bound in enumerate(table, start=1) if e_r <= bound)
    return CaaResult(n_max, n_robots - n_max, e_r, table)


def even_partition(n_robots, n):
    """Robots split into consecutive blocks of n (the last may be smaller)."""
    return [list(range(start, min(start + n, n_robots)))
            for start in range(0, n_robots, n)]


def even_split_edges(n_robots, alpha_c):
    """Exactly alpha_c edges whose removal leaves a largest component of
    n_max robots: all edges between the blocks of the even partition, then
    internal edges, keeping a path through the first block."""
    result = caa(n_robots, alpha_c)
    blocks = even_partition(n_robots, result.n_max)
    blockOf = {robot: b for b, block in enumerate(blocks) for robot in block}
    between, inside = [], []
    for i in range(n_robots):
        for j in range(i + 1, n_robots):
            if blockOf[i] != blockOf[j]:
                between.append((i, j))
            elif not (blockOf[i] == 0 and j == i + 1):
                inside.append((i, j))
    extra = alpha_c - len(between)
    return sorted(between + inside[:extra])
