"""Pure-Python edit-distance kernel, used when the compiled one is absent.

Two-row dynamic program over Unicode scalar values; O(len(a)*len(b)) time,
O(min(len)) space.
"""


def levenshtein(a: str, b: str) -> int:
    """Minimal insertions/deletions/substitutions turning a into b."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)

    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i] + [0] * len(b)
        for j, cb in enumerate(b, start=1):
            cost = prev[j - 1] if ca == cb else prev[j - 1] + 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, cost)
        prev = cur
    return prev[-1]
