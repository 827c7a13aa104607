"""First-order character chain with additively smoothed rows."""

from __future__ import annotations

import math
from typing import ClassVar, Mapping, Sequence

from ..encoding import esc, unesc
from ..errors import BadParams
from ..textnorm import NormalizedText
from ..tokenizer import TokenizerSpec
from .base import LanguageModel


class MarkovModel(LanguageModel):
    """log P(text | L) = log init(c1) + sum of log trans(ci | ci-1).

    Rows are smoothed over the global training alphabet plus one unknown
    slot, so every row exponentiates to 1 and unseen characters take the
    unknown mass. Higher is better.
    """

    method: ClassVar[str] = "markov"
    distance_based: ClassVar[bool] = False
    PARAM_TYPES: ClassVar[dict] = {"alpha": float}

    def __init__(
        self,
        labels: Sequence[str],
        tokenizer: TokenizerSpec,
        init_counts: Mapping[str, Mapping[str, int]],
        trans_counts: Mapping[str, Mapping[str, Mapping[str, int]]],
        n_sentences: Mapping[str, int],
        alpha: float,
    ):
        super().__init__(labels, tokenizer)
        if alpha <= 0:
            raise BadParams("alpha must be > 0")
        self.alpha = alpha
        self.init_counts = {code: dict(init_counts[code]) for code in self.labels}
        self.trans_counts = {
            code: {p: dict(nxt) for p, nxt in trans_counts[code].items()}
            for code in self.labels
        }
        self.n_sentences = {code: n_sentences[code] for code in self.labels}
        # Alphabet is derivable from the counts: every character of every
        # training text occurs as an initial or as a transition target.
        alphabet: set[str] = set()
        for code in self.labels:
            alphabet.update(self.init_counts[code])
            for prev, nxt in self.trans_counts[code].items():
                alphabet.add(prev)
                alphabet.update(nxt)
        self.alphabet = frozenset(alphabet)
        slots = len(self.alphabet) + 1  # + unknown
        self._log_init: dict[str, dict[str, float]] = {}
        self._log_init_unseen: dict[str, float] = {}
        self._log_trans: dict[str, dict[str, dict[str, float]]] = {}
        self._log_trans_unseen: dict[str, dict[str, float]] = {}
        self._log_trans_floor = -math.log(slots)  # unseen row: alpha/(alpha*slots)
        for code in self.labels:
            denom = self.n_sentences[code] + alpha * slots
            self._log_init[code] = {
                c: math.log(k + alpha) - math.log(denom)
                for c, k in self.init_counts[code].items()
            }
            self._log_init_unseen[code] = math.log(alpha) - math.log(denom)
            rows: dict[str, dict[str, float]] = {}
            row_unseen: dict[str, float] = {}
            for prev, nxt in self.trans_counts[code].items():
                out = sum(nxt.values())
                row_denom = out + alpha * slots
                rows[prev] = {
                    c: math.log(k + alpha) - math.log(row_denom)
                    for c, k in nxt.items()
                }
                row_unseen[prev] = math.log(alpha) - math.log(row_denom)
            self._log_trans[code] = rows
            self._log_trans_unseen[code] = row_unseen

    def params(self) -> dict:
        return {"alpha": self.alpha}

    @classmethod
    def train(
        cls,
        prepared: Mapping[str, list[NormalizedText]],
        tokenizer: TokenizerSpec,
        alpha: float = 1.0,
    ) -> "MarkovModel":
        if alpha <= 0:
            raise BadParams("alpha must be > 0")
        init_counts: dict[str, dict[str, int]] = {}
        trans_counts: dict[str, dict[str, dict[str, int]]] = {}
        n_sentences: dict[str, int] = {}
        for code, texts in prepared.items():
            init: dict[str, int] = {}
            trans: dict[str, dict[str, int]] = {}
            for text in texts:
                chars = text.text
                init[chars[0]] = init.get(chars[0], 0) + 1
                for prev, nxt in zip(chars, chars[1:]):
                    row = trans.setdefault(prev, {})
                    row[nxt] = row.get(nxt, 0) + 1
            init_counts[code] = init
            trans_counts[code] = trans
            n_sentences[code] = len(texts)
        return cls(
            labels=list(prepared),
            tokenizer=tokenizer,
            init_counts=init_counts,
            trans_counts=trans_counts,
            n_sentences=n_sentences,
            alpha=alpha,
        )

    def raw_scores(self, prepared: NormalizedText) -> dict[str, float]:
        chars = prepared.text
        scores: dict[str, float] = {}
        for code in self.labels:
            log_init = self._log_init[code]
            rows = self._log_trans[code]
            row_unseen = self._log_trans_unseen[code]
            total = log_init.get(chars[0], self._log_init_unseen[code])
            for prev, nxt in zip(chars, chars[1:]):
                row = rows.get(prev)
                if row is None:
                    total += self._log_trans_floor
                else:
                    total += row.get(nxt, row_unseen[prev])
            scores[code] = total
        return scores

    def payload_lines(self) -> list[str]:
        lines: list[str] = []
        for code in self.labels:
            lines.append(f"nsent\t{code}\t{self.n_sentences[code]}")
        for code in self.labels:
            init = self.init_counts[code]
            lines.append(f"init\t{code}\t{len(init)}")
            for ch in sorted(init):
                lines.append(f"g\t{esc(ch)}\t{init[ch]}")
        for code in self.labels:
            trans = self.trans_counts[code]
            pairs = sorted(
                (prev, nxt, cnt)
                for prev, row in trans.items()
                for nxt, cnt in row.items()
            )
            lines.append(f"trans\t{code}\t{len(pairs)}")
            for prev, nxt, cnt in pairs:
                lines.append(f"t\t{esc(prev)}\t{esc(nxt)}\t{cnt}")
        return lines

    @classmethod
    def parse_payload(cls, reader, labels, tokenizer, params) -> "MarkovModel":
        n_sentences: dict[str, int] = {}
        for code in labels:
            _, got_code, n = reader.take("nsent", 3, f"nsent {code}")
            reader.check(got_code == code, f"nsent {code}", "label order mismatch")
            n_sentences[code] = reader.to_int(n, f"nsent {code}")
        init_counts: dict[str, dict[str, int]] = {}
        for code in labels:
            section = f"init {code}"
            _, got_code, n_entries = reader.take("init", 3, section)
            reader.check(got_code == code, section, "label order mismatch")
            init: dict[str, int] = {}
            for _ in range(reader.to_int(n_entries, section)):
                _, ch_raw, cnt = reader.take("g", 3, section)
                init[unesc(ch_raw)] = reader.to_int(cnt, section)
            init_counts[code] = init
        trans_counts: dict[str, dict[str, dict[str, int]]] = {}
        for code in labels:
            section = f"trans {code}"
            _, got_code, n_entries = reader.take("trans", 3, section)
            reader.check(got_code == code, section, "label order mismatch")
            trans: dict[str, dict[str, int]] = {}
            for _ in range(reader.to_int(n_entries, section)):
                _, prev_raw, nxt_raw, cnt = reader.take("t", 4, section)
                row = trans.setdefault(unesc(prev_raw), {})
                row[unesc(nxt_raw)] = reader.to_int(cnt, section)
            trans_counts[code] = trans
        return cls(
            labels=labels,
            tokenizer=tokenizer,
            init_counts=init_counts,
            trans_counts=trans_counts,
            n_sentences=n_sentences,
            alpha=params["alpha"],
        )
