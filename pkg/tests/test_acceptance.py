"""End-to-end acceptance checks, one test per criterion.

Run with ``pytest -v tests/test_acceptance.py`` to get a single
pass/fail line per criterion.
"""

import random
import time

import pytest

from corefkit.cli import main
from corefkit.conll import parse_corpus, serialize_corpus, strip_singletons
from corefkit.metrics import lea, pronoun_score
from corefkit.transform import anonymize_names

import corpusgen
from conftest import FIXTURES
from test_metrics import lea_oracle, naive_pronoun_oracle, random_pair
from test_transform import all_transforms


def test_criterion_1_lea_on_the_worked_example(dialogue_gold, dialogue_pred):
    started = time.perf_counter()
    score = lea(dialogue_gold, dialogue_pred)
    elapsed = time.perf_counter() - started
    assert score.f1 == pytest.approx(6 / 7, abs=1e-9)
    assert score.recall == pytest.approx(0.75, abs=1e-9)
    assert score.precision == pytest.approx(1.0, abs=1e-9)
    assert elapsed < 1.0
    print(f"lea P={score.precision} R={score.recall} F1={score.f1} "
          f"({elapsed:.4f}s)")


def test_criterion_2_pronoun_score_on_the_worked_example(dialogue_gold, dialogue_pred):
    started = time.perf_counter()
    outcome = pronoun_score(dialogue_gold, dialogue_pred)
    elapsed = time.perf_counter() - started
    assert outcome.score == 50.0
    assert outcome.resolved == 1
    assert outcome.total == 2
    assert elapsed < 1.0
    print(f"pronoun score {outcome.score} "
          f"({outcome.resolved}/{outcome.total}, {elapsed:.4f}s)")


def test_criterion_3_pronoun_specific_variants_byte_for_byte(capsys):
    started = time.perf_counter()
    for name in ("hij", "zij", "hen", "die"):
        code = main(["transform", str(FIXTURES / "herstel.conll"),
                     "--paradigm", name, "--anonymize", "--neutralize-nouns"])
        out = capsys.readouterr().out
        assert code == 0
        expected = (FIXTURES / f"herstel_{name}.conll").read_text("utf-8")
        assert out == expected, f"{name} variant differs"
        # no PER tokens in this sentence, so anonymisation changes nothing
        code = main(["transform", str(FIXTURES / "herstel.conll"),
                     "--paradigm", name, "--neutralize-nouns"])
        assert code == 0 and capsys.readouterr().out == expected
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    print(f"four variants byte-identical ({elapsed:.4f}s)")


def test_criterion_4_name_anonymisation_example():
    doc = corpusgen.build_doc("voetbal", [[
        corpusgen.tok("Jan", pos="PROPN", ner="PER"),
        corpusgen.tok("Jansen", pos="PROPN", ner="PER"),
        corpusgen.tok("is"), corpusgen.tok("op"), corpusgen.tok("vrijdag"),
        corpusgen.tok("vrij"), corpusgen.tok("omdat"),
        corpusgen.tok("Jan", pos="PROPN", ner="PER"),
        corpusgen.tok("dan"), corpusgen.tok("voetbalt"),
    ]])
    rewritten, _ = anonymize_names(doc)
    sentence = " ".join(token.form for token in rewritten.tokens())
    assert sentence == "ANON_0 ANON_1 is op vrijdag vrij omdat ANON_0 dan voetbalt"
    print(sentence)


def test_criterion_5_sampling_and_augmentation_at_scale(tmp_path, capsys):
    rng = random.Random(20)
    corpus = corpusgen.random_corpus(rng, 625)
    assert len(corpus) == 625
    source = tmp_path / "c625.conll"
    source.write_text(serialize_corpus(corpus), "utf-8")

    started = time.perf_counter()
    for count in (62, 30, 15, 7):
        prefix = str(tmp_path / f"n{count}_")
        code = main(["sample", str(source), "--count", str(count),
                     "--partitions", "5", "--seed", "13",
                     "--out-prefix", prefix])
        capsys.readouterr()
        assert code == 0
        for i in range(5):
            lines = (tmp_path / f"n{count}_{i}.txt").read_text("utf-8") \
                .splitlines()
            assert len(lines) == count

    augmented = tmp_path / "cda.conll"
    assignments = tmp_path / "cda.tsv"
    code = main(["cda", str(source), "-o", str(augmented),
                 "--assignments", str(assignments)])
    capsys.readouterr()
    assert code == 0
    names = [line.split("\t")[1]
             for line in assignments.read_text("utf-8").splitlines()]
    assert len(names) == 625
    assert names.count("hen") == 313
    assert names.count("die") == 312
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    print(f"partition sizes exact, hen/die 313/312 ({elapsed:.2f}s)")


def test_criterion_6_property_suites():
    started = time.perf_counter()

    rng = random.Random(6001)
    for _ in range(1000):
        corpus = corpusgen.random_corpus(rng, rng.randint(1, 2))
        reparsed, diagnostics = parse_corpus(serialize_corpus(corpus))
        assert not diagnostics
        assert reparsed == corpus
    roundtrip_done = time.perf_counter()

    rng = random.Random(6002)
    for _ in range(500):
        gold, pred = random_pair(rng)
        score = lea(gold, pred)
        precision, recall, f1 = lea_oracle(gold, pred)
        assert score.precision == pytest.approx(precision, abs=1e-12)
        assert score.recall == pytest.approx(recall, abs=1e-12)
        assert score.f1 == pytest.approx(f1, abs=1e-12)
    lea_done = time.perf_counter()

    rng = random.Random(6003)
    for _ in range(500):
        gold, pred = random_pair(rng)
        outcome = pronoun_score(gold, pred)
        score, resolved, total, per_form, non_mention, first = \
            naive_pronoun_oracle(gold, pred)
        assert outcome.score == score
        assert (outcome.resolved, outcome.total) == (resolved, total)
        assert outcome.per_form == per_form
    pronoun_done = time.perf_counter()

    rng = random.Random(6004)
    transforms = all_transforms()
    for _ in range(500):
        doc = corpusgen.random_document(rng, "d")
        shape = [len(s) for s in doc.sentences]
        for label, fn in transforms:
            out = fn(doc)
            assert [len(s) for s in out.sentences] == shape, label
            assert out.clusters == doc.clusters, label
    grid_done = time.perf_counter()

    rng = random.Random(6005)
    for _ in range(150):
        doc = corpusgen.random_document(rng, "d")
        for label, fn in transforms:
            assert strip_singletons(fn(doc)) == fn(strip_singletons(doc)), label

    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    print(f"roundtrip {roundtrip_done - started:.1f}s, "
          f"lea {lea_done - roundtrip_done:.1f}s, "
          f"pronoun {pronoun_done - lea_done:.1f}s, "
          f"transforms {grid_done - pronoun_done:.1f}s, "
          f"total {elapsed:.1f}s")


def test_criterion_7_pipeline_is_deterministic(tmp_path, capsys):
    def pipeline(tag, jobs):
        transformed = tmp_path / f"{tag}.trans.conll"
        predicted = tmp_path / f"{tag}.pred.conll"
        report = tmp_path / f"{tag}.report.txt"
        assert main(["transform", str(FIXTURES / "e2e.conll"),
                     "--paradigm", "die", "--jobs", str(jobs),
                     "-o", str(transformed)]) == 0
        assert main(["resolve-baseline", str(transformed),
                     "--jobs", str(jobs), "-o", str(predicted)]) == 0
        assert main(["score", "--gold", str(transformed),
                     "--pred", str(predicted), "-o", str(report)]) == 0
        capsys.readouterr()
        return transformed.read_bytes(), predicted.read_bytes(), \
            report.read_bytes()

    first = pipeline("a", 1)
    second = pipeline("b", 1)
    threaded = pipeline("c", 4)
    assert first == second == threaded
    report = first[2].decode("utf-8")
    assert "documents=3" in report
    assert "lea_f1=0.585366" in report
    assert "pronoun_score=80.00" in report
    print("identical bytes across reruns and 1 vs 4 worker threads")
