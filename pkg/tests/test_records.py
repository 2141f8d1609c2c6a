import pytest

from ringcodes.fields import field_make
from ringcodes.groups import AbelianGroup
from ringcodes.records import CodeRecord, RecordError, format_record, parse_record_file

GOOD = """\
# comment line
[code]
field = 2
group = 6
n = 6
k = 1
d = 6
flags = R
u = 111111
v = 111111

[code]
field = 2^2
group = 5
n = 5
k = 1
d = 5  # trailing comment
u = 11111
v = a^2aa11
"""


def write(tmp_path, text):
    p = tmp_path / "t.codes"
    p.write_text(text)
    return p


def test_parse_good_file(tmp_path):
    recs = parse_record_file(write(tmp_path, GOOD))
    assert len(recs) == 2
    a, b = recs
    assert a.field == field_make(2)
    assert a.group == AbelianGroup([6])
    assert (a.n, a.k, a.d) == (6, 1, 6)
    assert a.flags == frozenset({"R"})
    assert a.tier == "normal" and a.shorten == ()
    assert b.field == field_make(2, 2)
    assert b.check_element().coeffs == (3, 2, 2, 1, 1)
    assert str(a.generator_element()) == "111111"


def test_format_parse_round_trip(tmp_path):
    recs = parse_record_file(write(tmp_path, GOOD))
    text = "\n".join(format_record(r) for r in recs)
    again = parse_record_file(write(tmp_path, text))
    for x, y in zip(recs, again):
        assert (x.field, x.group, x.u, x.v, x.n, x.k, x.d, x.flags, x.tier,
                x.shorten) == (y.field, y.group, y.u, y.v, y.n, y.k, y.d,
                               y.flags, y.tier, y.shorten)


def test_shorten_record(tmp_path):
    text = ("[code]\nfield = 5\ngroup = 6\nn = 5\nk = 1\nd = 5\n"
            "shorten = 1\nu = 111111\n")
    (rec,) = parse_record_file(write(tmp_path, text))
    assert rec.shorten == (1,)
    assert rec.group.order == rec.n + 1


@pytest.mark.parametrize("mutation,fragment", [
    ("field = 4", "not prime"),
    ("group = 7", "does not match"),
    ("flags = R,X", "flags"),
    ("tier = gold", "tier"),
    ("u = 11111", "coefficients"),
    ("bogus = 1", "unknown key"),
])
def test_bad_records_rejected(tmp_path, mutation, fragment):
    base = {"field": "field = 2", "group": "group = 6", "n": "n = 6",
            "k": "k = 1", "d": "d = 6", "u": "u = 111111"}
    key = mutation.split(" =")[0]
    if key in base:
        base[key] = mutation
        lines = list(base.values())
    else:
        lines = list(base.values()) + [mutation]
    text = "[code]\n" + "\n".join(lines) + "\n"
    with pytest.raises(RecordError, match=fragment):
        parse_record_file(write(tmp_path, text))


def test_missing_required_key(tmp_path):
    with pytest.raises(RecordError, match="missing key"):
        parse_record_file(write(tmp_path, "[code]\nfield = 2\ngroup = 6\n"))


def test_duplicate_key(tmp_path):
    text = "[code]\nfield = 2\nfield = 3\n"
    with pytest.raises(RecordError, match="duplicate"):
        parse_record_file(write(tmp_path, text))


def test_content_outside_block(tmp_path):
    with pytest.raises(RecordError, match="outside"):
        parse_record_file(write(tmp_path, "field = 2\n"))


def test_missing_file():
    with pytest.raises(RecordError, match="cannot read"):
        parse_record_file("/nonexistent/path.codes")


def test_shipped_tables_parse():
    from ringcodes.cli import shipped_table_paths

    paths = shipped_table_paths()
    assert len(paths) == 5
    total = 0
    for p in paths:
        recs = parse_record_file(p)
        assert recs
        total += len(recs)
        for rec in recs:
            # every record is internally consistent and self-describing
            assert rec.group.order == rec.n + len(rec.shorten)
            rec.generator_element()
            if rec.v is not None:
                rec.check_element()
    assert total == 68


def test_describe():
    f = field_make(5)
    rec = CodeRecord(field=f, group=AbelianGroup([6, 6]), u="0" * 36, v=None,
                     n=36, k=28, d=6, flags=frozenset({"R", "C"}))
    assert rec.describe() == "[36,28,6]_CR GF(5) 6x6"
