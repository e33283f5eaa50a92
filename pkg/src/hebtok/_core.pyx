# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled WordPiece kernels: merge training and greedy encoding.

Mirrors hebtok._core_py exactly (same scores, same tie-breaks, same
output); the reference semantics are documented there.  Pair statistics
live in C++ hash maps keyed by packed symbol pairs, word sequences in C
vectors; the candidate heap stays a Python heapq because its entries carry
the tie-breaking strings.
"""

from heapq import heapify, heappop, heappush

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector
from libcpp.algorithm cimport sort as csort

ctypedef long long i64

KERNEL_NAME = "cython"


def encode_word(str text, dict index, str marker, str unk, Py_ssize_t max_chars):
    """Greedy longest-match-first pieces for one pre-token text."""
    cdef Py_ssize_t n = len(text)
    if n > max_chars:
        return [unk]
    if text in index:
        return [text]
    cdef list pieces = []
    cdef Py_ssize_t start = 0, end
    cdef str prefix, candidate
    cdef object found
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


cdef inline i64 pack(i64 a, i64 b):
    return (a << 32) | b


cdef inline str merged_string(list sym_str, int a, int b, str marker, Py_ssize_t mlen):
    cdef str b_str = <str>sym_str[b]
    if b_str.startswith(marker):
        return <str>sym_str[a] + b_str[mlen:]
    return <str>sym_str[a] + b_str


def train_merges(list words, list freqs, long long budget,
                 long long min_pair_frequency, str marker, set existing):
    """Run the merge loop; returns newly created token strings in order."""
    if budget <= 0:
        return []
    cdef i64 eff_min = min_pair_frequency if min_pair_frequency > 1 else 1
    cdef Py_ssize_t mlen = len(marker)

    cdef dict sym_of = {}
    cdef list sym_str = []
    cdef vector[i64] sym_count
    cdef vector[vector[int]] seqs
    cdef vector[i64] wfreq

    cdef unordered_map[i64, i64] pair_count
    cdef unordered_map[i64, vector[int]] pair_words
    cdef unordered_map[int, unordered_set[i64]] by_sym
    cdef unordered_map[i64, double] score_map
    cdef unordered_set[i64] candidates

    cdef str word, ch, m_str
    cdef object sym_obj, entry
    cdef int a, b, m, s, wi, a2, b2, nsym = 0
    cdef i64 f, key, k, c
    cdef Py_ssize_t i, j, wlen
    cdef vector[int] new_seq, affected
    cdef vector[int]* seq_ptr
    cdef double score, neg

    # --- intern symbols and build per-word sequences -----------------------
    seqs.resize(len(words))
    for i in range(len(words)):
        word = <str>words[i]
        wfreq.push_back(<i64>freqs[i])
        wlen = len(word)
        for j in range(wlen):
            ch = word[j] if j == 0 else marker + word[j]
            sym_obj = sym_of.get(ch)
            if sym_obj is None:
                sym_of[ch] = nsym
                sym_str.append(ch)
                sym_count.push_back(0)
                s = nsym
                nsym += 1
            else:
                s = <int>sym_obj
            seqs[i].push_back(s)

    # --- initial statistics ------------------------------------------------
    for i in range(<Py_ssize_t>seqs.size()):
        f = wfreq[i]
        seq_ptr = &seqs[i]
        wlen = seq_ptr.size()
        for j in range(wlen):
            sym_count[deref(seq_ptr)[j]] += f
        for j in range(wlen - 1):
            a = deref(seq_ptr)[j]
            b = deref(seq_ptr)[j + 1]
            key = pack(a, b)
            pair_count[key] += f
            if pair_words[key].empty() or pair_words[key].back() != <int>i:
                pair_words[key].push_back(<int>i)
            by_sym[a].insert(key)
            by_sym[b].insert(key)

    # --- initial heap --------------------------------------------------------
    cdef list heap = []
    cdef unordered_map[i64, i64].iterator pit = pair_count.begin()
    while pit != pair_count.end():
        key = deref(pit).first
        c = deref(pit).second
        if c >= eff_min:
            a = <int>(key >> 32)
            b = <int>(key & 0xffffffff)
            score = (<double>c) / ((<double>sym_count[a]) * (<double>sym_count[b]))
            score_map[key] = score
            heap.append((-score, merged_string(sym_str, a, b, marker, mlen),
                         sym_str[a], sym_str[b], a, b))
        inc(pit)
    heapify(heap)

    cdef set created = set()
    cdef list merges_out = []
    cdef unordered_map[i64, double].iterator sit
    cdef unordered_set[i64].iterator cit, bit
    cdef unordered_map[i64, vector[int]].iterator wit
    cdef Py_ssize_t last, prev

    while budget > 0 and heap:
        entry = heappop(heap)
        neg = <double>(<object>entry[0])
        a = <int>(<object>entry[4])
        b = <int>(<object>entry[5])
        key = pack(a, b)
        sit = score_map.find(key)
        if sit == score_map.end() or deref(sit).second != -neg:
            continue  # stale entry; a fresher one is (or was) in the heap
        m_str = <str>entry[1]

        sym_obj = sym_of.get(m_str)
        if sym_obj is None:
            m = nsym
            sym_of[m_str] = nsym
            sym_str.append(m_str)
            sym_count.push_back(0)
            nsym += 1
        else:
            m = <int>sym_obj

        # deduplicated, sorted list of words containing the pair
        affected.clear()
        wit = pair_words.find(key)
        if wit != pair_words.end():
            affected = deref(wit).second
            csort(affected.begin(), affected.end())
            j = 0
            prev = -1
            for i in range(<Py_ssize_t>affected.size()):
                if affected[i] != prev:
                    prev = affected[i]
                    affected[j] = <int>prev
                    j += 1
            affected.resize(j)
            pair_words.erase(wit)

        candidates.clear()
        for i in range(<Py_ssize_t>affected.size()):
            wi = affected[i]
            seq_ptr = &seqs[wi]
            wlen = seq_ptr.size()
            if wlen < 2:
                continue
            f = wfreq[wi]
            for j in range(wlen):
                sym_count[deref(seq_ptr)[j]] -= f
            for j in range(wlen - 1):
                k = pack(deref(seq_ptr)[j], deref(seq_ptr)[j + 1])
                pair_count[k] -= f
                candidates.insert(k)
            new_seq.clear()
            j = 0
            last = wlen - 1
            while j <= last:
                if j < last and deref(seq_ptr)[j] == a and deref(seq_ptr)[j + 1] == b:
                    new_seq.push_back(m)
                    j += 2
                else:
                    new_seq.push_back(deref(seq_ptr)[j])
                    j += 1
            seqs[wi] = new_seq
            seq_ptr = &seqs[wi]
            wlen = seq_ptr.size()
            for j in range(wlen):
                sym_count[deref(seq_ptr)[j]] += f
            for j in range(wlen - 1):
                k = pack(deref(seq_ptr)[j], deref(seq_ptr)[j + 1])
                pair_count[k] += f
                candidates.insert(k)
                if pair_words[k].empty() or pair_words[k].back() != wi:
                    pair_words[k].push_back(wi)
                by_sym[deref(seq_ptr)[j]].insert(k)
                by_sym[deref(seq_ptr)[j + 1]].insert(k)

        # pairs containing a symbol whose total count changed
        for s in (a, b, m):
            bit = by_sym[s].begin()
            while bit != by_sym[s].end():
                candidates.insert(deref(bit))
                inc(bit)

        cit = candidates.begin()
        while cit != candidates.end():
            k = deref(cit)
            inc(cit)
            pit = pair_count.find(k)
            c = deref(pit).second if pit != pair_count.end() else 0
            a2 = <int>(k >> 32)
            b2 = <int>(k & 0xffffffff)
            if c <= 0:
                if pit != pair_count.end():
                    pair_count.erase(pit)
                pair_words.erase(k)
                by_sym[a2].erase(k)
                by_sym[b2].erase(k)
                score_map.erase(k)
                continue
            if c < eff_min:
                score_map.erase(k)
                continue
            score = (<double>c) / ((<double>sym_count[a2]) * (<double>sym_count[b2]))
            sit = score_map.find(k)
            if sit == score_map.end() or deref(sit).second != score:
                score_map[k] = score
                heappush(heap, (-score, merged_string(sym_str, a2, b2, marker, mlen),
                                sym_str[a2], sym_str[b2], a2, b2))

        if m_str not in existing and m_str not in created:
            created.add(m_str)
            merges_out.append(m_str)
            budget -= 1

        # drop accumulated stale entries once they dominate the heap
        if len(heap) > 65536 and <size_t>len(heap) > 8 * score_map.size():
            heap = []
            sit = score_map.begin()
            while sit != score_map.end():
                k = deref(sit).first
                score = deref(sit).second
                a2 = <int>(k >> 32)
                b2 = <int>(k & 0xffffffff)
                heap.append((-score, merged_string(sym_str, a2, b2, marker, mlen),
                             sym_str[a2], sym_str[b2], a2, b2))
                inc(sit)
            heapify(heap)

    return merges_out
