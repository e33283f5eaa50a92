"""Pure-Python WordPiece kernels: merge training and greedy encoding.

This is the fallback twin of the compiled kernel (hebtok._core); both
implement the same algorithms and must produce identical output for
identical input.  The trainer keeps exact pair statistics and picks, each
iteration, the adjacent symbol pair maximizing

    score(a, b) = count(ab) / (count(a) * count(b))

computed in double precision, with ties broken by the lexicographically
smaller merged string, then by the pair's own strings.  A lazy max-heap
avoids rescanning all pairs: every time a pair's score changes (its own
count, or the count of either side symbol), a fresh entry is pushed and
stale entries are dropped when popped.
"""

from heapq import heapify, heappop, heappush

__all__ = ["encode_word", "train_merges"]

KERNEL_NAME = "pure-python"


def encode_word(
    text: str,
    index: dict[str, int],
    marker: str,
    unk: str,
    max_chars: int,
) -> list[str]:
    """Greedy longest-match-first pieces for one pre-token text."""
    if len(text) > max_chars:
        return [unk]
    if text in index:
        return [text]
    pieces: list[str] = []
    start = 0
    n = len(text)
    while start < n:
        prefix = marker if start else ""
        end = n
        found = None
        while end > start:
            candidate = prefix + text[start:end]
            if candidate in index:
                found = candidate
                break
            end -= 1
        if found is None:
            return [unk]
        pieces.append(found)
        start = end
    return pieces


def train_merges(
    words: list[str],
    freqs: list[int],
    budget: int,
    min_pair_frequency: int,
    marker: str,
    existing: set[str],
) -> list[str]:
    """Run the merge loop; returns newly created token strings in order.

    ``words`` are unique pre-token texts (caller sorts them), ``freqs`` the
    aligned occurrence counts, ``budget`` the number of new tokens allowed,
    ``existing`` the tokens already in the vocabulary (merges producing one
    of those do not consume budget).
    """
    if budget <= 0:
        return []
    eff_min = max(1, min_pair_frequency)
    mlen = len(marker)

    sym_of: dict[str, int] = {}
    sym_str: list[str] = []
    sym_count: list[int] = []

    def intern(s: str) -> int:
        i = sym_of.get(s)
        if i is None:
            i = len(sym_str)
            sym_of[s] = i
            sym_str.append(s)
            sym_count.append(0)
        return i

    seqs: list[list[int]] = []
    for word in words:
        seqs.append([intern(word[0])] + [intern(marker + c) for c in word[1:]])

    pair_count: dict[tuple[int, int], int] = {}
    pair_words: dict[tuple[int, int], set[int]] = {}
    by_sym: dict[int, set[tuple[int, int]]] = {}

    for i, seq in enumerate(seqs):
        f = freqs[i]
        for s in seq:
            sym_count[s] += f
        for j in range(len(seq) - 1):
            q = (seq[j], seq[j + 1])
            pair_count[q] = pair_count.get(q, 0) + f
            pair_words.setdefault(q, set()).add(i)
            by_sym.setdefault(q[0], set()).add(q)
            by_sym.setdefault(q[1], set()).add(q)

    def merged_string(a: int, b: int) -> str:
        b_str = sym_str[b]
        if b_str.startswith(marker):
            return sym_str[a] + b_str[mlen:]
        return sym_str[a] + b_str

    def score_of(q: tuple[int, int]) -> float:
        return pair_count[q] / (float(sym_count[q[0]]) * float(sym_count[q[1]]))

    score_map: dict[tuple[int, int], float] = {}
    heap: list[tuple[float, str, str, str, int, int]] = []
    for q in pair_count:
        if pair_count[q] >= eff_min:
            s = score_of(q)
            score_map[q] = s
            heap.append((-s, merged_string(*q), sym_str[q[0]], sym_str[q[1]], q[0], q[1]))
    heapify(heap)

    created: set[str] = set()
    merges_out: list[str] = []

    while budget > 0 and heap:
        neg, m_str, _, _, a, b = heappop(heap)
        pair = (a, b)
        if score_map.get(pair) != -neg:
            continue  # stale entry; a fresher one is (or was) in the heap

        # Apply the merge.
        m = sym_of.get(m_str)
        if m is None:
            m = intern(m_str)
        changed: set[tuple[int, int]] = set()
        affected = sorted(pair_words.pop(pair, ()))
        for i in affected:
            seq = seqs[i]
            if len(seq) < 2:
                continue
            f = freqs[i]
            for s in seq:
                sym_count[s] -= f
            for j in range(len(seq) - 1):
                q = (seq[j], seq[j + 1])
                pair_count[q] -= f
                changed.add(q)
            new_seq: list[int] = []
            j = 0
            last = len(seq) - 1
            while j <= last:
                if j < last and seq[j] == a and seq[j + 1] == b:
                    new_seq.append(m)
                    j += 2
                else:
                    new_seq.append(seq[j])
                    j += 1
            seqs[i] = new_seq
            for s in new_seq:
                sym_count[s] += f
            for j in range(len(new_seq) - 1):
                q = (new_seq[j], new_seq[j + 1])
                pair_count[q] = pair_count.get(q, 0) + f
                changed.add(q)
                pair_words.setdefault(q, set()).add(i)
                by_sym.setdefault(q[0], set()).add(q)
                by_sym.setdefault(q[1], set()).add(q)

        # Pairs whose score moved: their own count changed, or they contain
        # a symbol whose total count changed (a, b, and the merge result).
        candidates = set(changed)
        for s in (a, b, m):
            candidates |= by_sym.get(s, set())
        for q in candidates:
            c = pair_count.get(q, 0)
            if c <= 0:
                pair_count.pop(q, None)
                pair_words.pop(q, None)
                by_sym.get(q[0], set()).discard(q)
                by_sym.get(q[1], set()).discard(q)
                score_map.pop(q, None)
                continue
            if c < eff_min:
                score_map.pop(q, None)
                continue
            s_new = score_of(q)
            if score_map.get(q) != s_new:
                score_map[q] = s_new
                heappush(
                    heap, (-s_new, merged_string(*q), sym_str[q[0]], sym_str[q[1]], q[0], q[1])
                )

        if m_str not in existing and m_str not in created:
            created.add(m_str)
            merges_out.append(m_str)
            budget -= 1

        # Drop accumulated stale entries once they dominate the heap.
        if len(heap) > 65536 and len(heap) > 8 * len(score_map):
            heap = [
                (-s, merged_string(*q), sym_str[q[0]], sym_str[q[1]], q[0], q[1])
                for q, s in score_map.items()
            ]
            heapify(heap)

    return merges_out
