import heapq
import typing as t

from ..alias import Word
from ..freealg import FreeAlgebra

# (generator index, left word, right word) -> coefficient
Trace = t.Dict[t.Tuple[int, Word, Word], t.Any]
Terms = t.Dict[Word, t.Any]


def heap_key(word: Word):
    """Max-heap key for `heapq` under the degree-lexicographic order."""
    return (-len(word), tuple(-e for e in word))


def add_term(terms: Terms, word: Word, value) -> bool:
    """Add `value` at `word`; True when the word is new in `terms`."""
    current = terms.get(word)
    if current is None:
        terms[word] = value
        return True

    current = current + value
    if current:
        terms[word] = current

    else:
        del terms[word]

    return False


def add_trace(target: Trace, source: Trace, left: Word, right: Word, factor):
    for (index, u, w), value in source.items():
        key = (index, left + u, w + right)
        current = target.get(key)
        current = factor * value if current is None else current + factor * value
        if current:
            target[key] = current

        else:
            del target[key]


class Reducer:
    """
    Leading-word index over a set of monic polynomials.

    Each element is stored as its leading word plus a tail, the remaining
    terms, so that `lead -> -tail` is a rewrite rule. Divisors are found by
    contiguous subword lookups, leftmost position first.
    """
    def __init__(self, ring: FreeAlgebra):
        self.ring = ring
        self.leads: t.Dict[Word, int] = {}
        self.elements: t.Dict[int, t.Tuple[Word, Terms]] = {}
        self.traces: t.Dict[int, Trace] = {}
        self._lengths: t.List[int] = []

    def __len__(self):
        return len(self.elements)

    def _refresh(self):
        self._lengths = sorted({len(e) for e in self.leads})

    def add(self, index: int, terms: Terms, lead: Word, trace: t.Optional[Trace] = None):
        tail = dict(terms)
        del tail[lead]
        self.elements[index] = (lead, tail)
        self.leads[lead] = index
        if trace is not None:
            self.traces[index] = trace

        self._refresh()

    def remove(self, index: int) -> t.Tuple[Word, Terms, t.Optional[Trace]]:
        lead, tail = self.elements.pop(index)
        del self.leads[lead]
        self._refresh()

        terms = dict(tail)
        terms[lead] = self.ring.field.one
        return lead, terms, self.traces.pop(index, None)

    def terms(self, index: int) -> Terms:
        lead, tail = self.elements[index]
        terms = dict(tail)
        terms[lead] = self.ring.field.one
        return terms

    def find(self, word: Word) -> t.Optional[t.Tuple[int, int]]:
        """Leftmost `(element, position)` whose lead occurs in `word`."""
        leads = self.leads
        size = len(word)
        for start in range(size + 1):
            for length in self._lengths:
                if start + length > size:
                    break

                index = leads.get(word[start:start + length])
                if index is not None:
                    return index, start

        return None

    def has_suffix_lead(self, word: Word) -> bool:
        """True when some lead occurs in `word` ending at its last letter."""
        leads = self.leads
        size = len(word)
        for length in self._lengths:
            if length > size:
                break

            if length and word[size - length:] in leads:
                return True

        return () in leads

    def reduce(
        self,
        terms: t.Mapping[Word, t.Any],
        trace: t.Optional[Trace] = None,
        memo: t.Optional[t.Callable[[Word], t.Optional[Terms]]] = None
    ) -> Terms:
        """
        Full top-down reduction to normal form.

        When `trace` is given, `c * u * g * w` for every rewrite step with
        element `g` is added to it through the element's own trace, so that
        `input == result + sum(trace)` holds throughout.
        """
        concat = self.ring.concat
        pending = {k: v for k, v in terms.items() if v}
        heap = [(heap_key(w), w) for w in pending]
        heapq.heapify(heap)

        result: Terms = {}
        while heap:
            _, word = heapq.heappop(heap)
            coeff = pending.pop(word, None)
            if coeff is None:
                continue

            if memo is not None:
                known = memo(word)
                if known is not None:
                    for w, v in known.items():
                        add_term(result, w, coeff * v)
                    continue

            hit = self.find(word)
            if hit is None:
                add_term(result, word, coeff)
                continue

            index, start = hit
            lead, tail = self.elements[index]
            left = word[:start]
            right = word[start + len(lead):]

            for w, v in tail.items():
                new = concat(concat(left, w), right)
                if add_term(pending, new, -coeff * v):
                    heapq.heappush(heap, (heap_key(new), new))

            if trace is not None:
                add_trace(trace, self.traces[index], left, right, coeff)

        return result
