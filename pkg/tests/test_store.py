import json

import pytest

from qpartition import (
    DatabaseChecksumError,
    DatabaseParseError,
    DatabaseVersionError,
    DomainError,
    FormulaDatabase,
    RecordNotFoundError,
    build_database,
    discover_durfee,
    durfee_count_oracle,
    eval_from_db,
    euler_partition_series,
    load_database,
    parse_count,
    pmn_oracle,
    save_database,
)

from golden import CLASSICAL_PMN


class TestParseCount:
    def test_forms(self):
        assert parse_count(17) == 17
        assert parse_count("123456") == 123456
        assert parse_count("10^100") == 10**100
        assert parse_count(" 10^3 ") == 1000

    def test_rejects_garbage(self):
        for bad in ("-5", "1e6", "ten", "10^", "2*10^5"):
            with pytest.raises(DomainError):
                parse_count(bad)
        with pytest.raises(DomainError):
            parse_count(-1)


class TestBuildDatabase:
    def test_pmn_five_matches_classical(self, small_pmn_db):
        db, _ = small_pmn_db
        assert len(db.records) == 5
        for m, expected in CLASSICAL_PMN.items():
            assert db.get("pmn", m).formula == expected

    def test_single_record(self, tmp_path):
        db = build_database("pmn", 1)
        assert len(db.records) == 1
        assert eval_from_db(db, "pmn", 1, "10^50") == 1

    def test_durfee_records_sum_with_oracle(self):
        db = build_database("durfee", 3)
        assert len(db.records) == 3
        total = sum(eval_from_db(db, "durfee", k, 20) for k in (1, 2, 3))
        # Durfee sizes up to 4 occur at n=20; the missing class comes from
        # the enumeration oracle.
        assert total + durfee_count_oracle(4, 20) == euler_partition_series(20)[20]

    def test_rejects_unknown_kind(self):
        with pytest.raises(DomainError):
            build_database("fibonacci", 3)

    def test_resumable_build(self, tmp_path):
        path = str(tmp_path / "db.json")
        build_database("pmn", 3, path=path)
        first = load_database(path)
        seen = []
        build_database("pmn", 5, path=path, progress=seen.append)
        assert seen == [4, 5]  # records 1..3 were reused
        final = load_database(path)
        for m in range(1, 4):
            assert final.get("pmn", m) == first.get("pmn", m)


class TestRoundTrip:
    def test_bit_exact(self, small_pmn_db, tmp_path):
        db, path = small_pmn_db
        loaded = load_database(path)
        assert loaded == db
        second = str(tmp_path / "copy.json")
        save_database(loaded, second)
        assert open(second, "rb").read() == open(path, "rb").read()

    def test_version_mismatch(self, small_pmn_db, tmp_path):
        _, path = small_pmn_db
        doc = json.load(open(path))
        doc["format_version"] = 99
        bad = tmp_path / "versioned.json"
        bad.write_text(json.dumps(doc))
        with pytest.raises(DatabaseVersionError):
            load_database(str(bad))

    def test_truncated_file(self, small_pmn_db, tmp_path):
        _, path = small_pmn_db
        text = open(path).read()
        bad = tmp_path / "truncated.json"
        bad.write_text(text[: len(text) // 2])
        with pytest.raises(DatabaseParseError):
            load_database(str(bad))

    def test_checksum_corruption(self, small_pmn_db, tmp_path):
        _, path = small_pmn_db
        doc = json.load(open(path))
        # Tamper with one coefficient but keep the stored checksum.
        doc["records"][0]["formula"]["components"][0]["pieces"][0][0] = "2/1"
        bad = tmp_path / "tampered.json"
        bad.write_text(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        with pytest.raises(DatabaseChecksumError):
            load_database(str(bad))

    def test_missing_file(self, tmp_path):
        with pytest.raises(DatabaseParseError):
            load_database(str(tmp_path / "nope.json"))


class TestEvalFromDb:
    def test_examples(self, small_pmn_db):
        db, _ = small_pmn_db
        assert eval_from_db(db, "pmn", 4, 13) == 18
        assert eval_from_db(db, "pmn", 4, 13) == pmn_oracle(4, 13)
        assert eval_from_db(db, "pmn", 1, "10^50") == 1

    def test_oracle_agreement(self, small_pmn_db):
        db, _ = small_pmn_db
        for m in range(1, 6):
            table = [eval_from_db(db, "pmn", m, n) for n in range(300)]
            from qpartition import pmn_table

            assert table == pmn_table(m, 299)

    def test_durfee_shift_handling(self):
        db = FormulaDatabase()
        db.add(discover_durfee(2))
        assert eval_from_db(db, "durfee", 2, 3) == 0
        assert eval_from_db(db, "durfee", 2, 5) == 2

    def test_missing_record_names_available(self, small_pmn_db):
        db, _ = small_pmn_db
        with pytest.raises(RecordNotFoundError) as err:
            eval_from_db(db, "pmn", 9, 5)
        assert "[1, 2, 3, 4, 5]" in str(err.value)

    def test_duplicate_rejected(self):
        db = FormulaDatabase()
        db.add(discover_durfee(1))
        with pytest.raises(DomainError):
            db.add(discover_durfee(1))
