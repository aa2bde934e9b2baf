"""Randomized identities of dual reflections."""

from __future__ import annotations

import random

from ..const import (
    CONF_SAMPLES,
    CONF_SEED,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DUAL_RANKS,
    FAMILY_D,
    MAX_WORD_LENGTH,
    SUITE_DUAL,
)
from ..diagram import d_catalog, partial_cartan
from ..dual_weyl import (
    apply_dual_word,
    contragredient_check,
    dual_reflect,
    duality_check,
    intertwining_check,
    random_word,
    transpose_identity_check,
)
from ..linalg import eval_form
from ..linkage import enumerate_full, vertex_extension
from ..root_system import AdeType
from .base import BaseSuite, SuiteResult

CHECK_INVOLUTION = "involution"
CHECK_INTERTWINING = "intertwining"
CHECK_TRANSPOSE = "transpose"
CHECK_INVARIANCE = "inverse_form_invariance"
CHECK_DUALITY = "duality"
CHECK_CONTRAGREDIENT = "contragredient"
CHECK_CLOSURE = "closure"


class DualSuite(BaseSuite):
    """Seeded random cases over the D-type catalog, each identity checked per case."""

    suite_name = SUITE_DUAL

    def _fixtures(self) -> list[tuple]:
        out = []
        for d in d_catalog(DUAL_RANKS):
            extension = vertex_extension(d, AdeType(FAMILY_D, d.rank + 1))
            labels = sorted(enumerate_full(d).total)
            out.append((d, extension.witness, labels, partial_cartan(d).inverse))
        return out

    def run(self) -> SuiteResult:
        result = self.new_result()
        samples = self.options.get(CONF_SAMPLES, DEFAULT_SAMPLES)
        rng = random.Random(self.options.get(CONF_SEED, DEFAULT_SEED))
        fixtures = self._fixtures()
        counts = dict.fromkeys(
            (
                CHECK_INVOLUTION,
                CHECK_INTERTWINING,
                CHECK_TRANSPOSE,
                CHECK_INVARIANCE,
                CHECK_DUALITY,
                CHECK_CONTRAGREDIENT,
                CHECK_CLOSURE,
            ),
            0,
        )
        label_sets = {d.name: set(labels) for d, _, labels, _ in fixtures}
        outside = {d.name: g.outside_roots() for d, g, _, _ in fixtures}
        for case in range(samples):
            d, g, labels, b_inverse = rng.choice(fixtures)
            i = rng.randrange(d.rank)
            u = rng.choice(labels)
            word = random_word(rng, d.rank, MAX_WORD_LENGTH)
            gamma = rng.choice(outside[d.name])
            image = dual_reflect(d, i, u)
            tag = f"case {case} ({d.name}, s{i + 1}, {u}, word {word})"
            outcomes = {
                CHECK_INVOLUTION: dual_reflect(d, i, image) == u,
                CHECK_INTERTWINING: intertwining_check(d, i),
                CHECK_TRANSPOSE: transpose_identity_check(d, i),
                CHECK_INVARIANCE: eval_form(b_inverse, image.labels) == eval_form(b_inverse, u.labels),
                CHECK_DUALITY: duality_check(g, word, gamma),
                CHECK_CONTRAGREDIENT: contragredient_check(d, word),
                CHECK_CLOSURE: apply_dual_word(d, word, u) in label_sets[d.name],
            }
            for check, ok in outcomes.items():
                counts[check] += 1
                result.check(ok, f"{tag}: {check}")
        result.details["cases"] = counts
        self._log_action(f"{samples} random cases", f"seed {self.options.get(CONF_SEED, DEFAULT_SEED)}")
        return result
