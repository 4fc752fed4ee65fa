import json

import pytest

import mmchaos


def test_fixtures_catalog():
    names = mmchaos.fixtures()
    assert "example1" in names
    assert "tent" in names


def test_iterate_exact():
    image = mmchaos.iterate("example1", "1/3", 1)
    assert image == ["0", "2/3"]


def test_hausdorff_sets():
    assert mmchaos.hausdorff("{0,1}", "{0}") == "1"
    assert mmchaos.hausdorff("{0, 1/4, 1}", "{1/2}") == "1/2^1"


def test_word_family():
    assert mmchaos.build_word(1) == "10111"
    assert len(mmchaos.build_word(3)) == 125
    assert mmchaos.block_count(2, "10111") == 3


def test_run_reports():
    code, body = mmchaos.run(json.dumps({"probe": "iterate", "system": "tent", "x": "1/4", "n": "2"}))
    assert code == 0
    doc = json.loads(body)
    assert doc["image"] == ["1"]


def test_run_resource_error():
    code, body = mmchaos.run(json.dumps({"probe": "word", "n": 12}))
    assert code == 3
    assert json.loads(body)["error"]["code"] == "resource"


def test_error_maps_to_exception():
    with pytest.raises(mmchaos.ChaosError):
        mmchaos.iterate("no-such-system", "0", 1)
