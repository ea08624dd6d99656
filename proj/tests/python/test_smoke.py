import os

import pytest

import ridesched

FIXTURES = os.environ["RIDESCHED_FIXTURES"]


@pytest.fixture(scope="module")
def small():
    return ridesched.load_instance(os.path.join(FIXTURES, "small.txt"))


def test_load_instance(small):
    assert small.name == "small"
    assert small.requests == 6
    assert small.capacity >= 1
    assert not small.has_battery
    assert small.travel(0, 1) == pytest.approx(small.travel(1, 0))


def test_parse_instance_text():
    text = (
        "1 1 480 6 90\n"
        "0 0 0 0 0 0 480\n"
        "1 1 0 3 1 0 480\n"
        "2 2 0 3 -1 0 480\n"
        "3 0 0 0 0 0 480\n"
    )
    inst = ridesched.parse_instance(text, name="tiny")
    assert inst.name == "tiny"
    assert inst.requests == 1


def test_eadarp_battery_flag():
    inst = ridesched.load_instance(os.path.join(FIXTURES, "ea.txt"), format="eadarp")
    assert inst.has_battery


def test_generate_and_schedule(small):
    corpus = ridesched.generate(small, seed=42, count=50, size_min=4, size_max=12)
    assert len(corpus) == 50
    feasible = 0
    for rec in corpus:
        assert rec.instance_id == "small"
        assert rec.node_ids[0] == 0
        res = ridesched.schedule(small, rec, alg="alg1")
        if res["feasible"]:
            feasible += 1
            assert res["excess"] >= -1e-9
            assert len(res["starts"]) == len(rec.node_ids)
            oracle = ridesched.schedule(small, rec, alg="oracle")
            assert oracle["feasible"]
            assert res["excess"] == pytest.approx(oracle["excess"], abs=1e-6)
        else:
            assert res["excess"] is None
            assert res["reason"]
    assert feasible > 0


def test_bench_csv(small):
    corpus = ridesched.generate(small, seed=7, count=30)
    csv = ridesched.bench_csv(small, corpus, ["alg1", "oracle"])
    lines = csv.strip().splitlines()
    assert lines[0] == (
        "name,n_routes,size_min,size_max,alg,"
        "n_infeasible,n_deviating,avg_dev_pct,avg_cpu_ms"
    )
    assert len(lines) == 3
    assert all(line.startswith("small,30,") for line in lines[1:])


def test_corpus_round_trip():
    recs = [ridesched.CorpusRecord("small", 1, [0, 2, 8, 13])]
    text = ridesched.write_corpus(recs)
    assert text == "small;1;0,2,8,13\n"
    back = ridesched.read_corpus(text)
    assert len(back) == 1
    assert back[0].node_ids == [0, 2, 8, 13]
