import json
import shutil

import pytest

from rdcentroid import config
from rdcentroid.config import REQUIRED, ConfigError, bump_version, digest, load_config, read_raw, use_config, write_config


@pytest.fixture
def tmp_config(tmp_path):
    path = tmp_path / "constants.json"
    shutil.copy(config.default_path(), path)
    yield path
    use_config(None)


def test_packaged_config_is_complete_and_positive():
    cfg = load_config()
    assert set(REQUIRED) <= set(cfg.as_dict())
    assert all(cfg.as_dict()[k] > 0 for k in REQUIRED)
    assert cfg.version.count(".") == 1


def test_digest_guards_edits(tmp_config):
    raw = json.loads(tmp_config.read_text())
    raw["surfaces"]["S_1_1"]["c"] += 1
    tmp_config.write_text(json.dumps(raw))
    with pytest.raises(ConfigError, match="digest"):
        read_raw(tmp_config)


def test_write_config_bumps_version(tmp_config):
    before = load_config(path=tmp_config)
    same = write_config({"c": before.c}, path=tmp_config)
    assert same == before.version
    new = write_config({"c": before.c + 1}, path=tmp_config)
    assert new == bump_version(before.version)
    after = load_config(path=tmp_config)
    assert after.c == before.c + 1 and after.version == new
    raw = read_raw(tmp_config)
    assert raw["digest"] == digest(raw["surfaces"])


def test_use_config_switches_and_restores(tmp_config):
    write_config({"B": 99}, path=tmp_config)
    assert use_config(tmp_config).B == 99
    assert use_config(None).B != 99


def test_invalid_configs(tmp_config):
    raw = json.loads(tmp_config.read_text())
    raw["surfaces"]["S_1_1"]["m0"] = 0
    raw["digest"] = digest(raw["surfaces"])
    tmp_config.write_text(json.dumps(raw))
    with pytest.raises(ConfigError, match="positive"):
        load_config(path=tmp_config)
    with pytest.raises(ConfigError):
        load_config("S_0_5", path=tmp_config)


def test_bump_version():
    assert bump_version("1.9") == "1.10"
