import pytest

from reuse_vr.settings import default_settings


@pytest.fixture
def settings():
    return default_settings()


@pytest.fixture
def fast_settings():
    """Defaults with the sampling constants lowered, so that runs stay desk-sized."""
    return default_settings() \
        .replace('mdp', vrvi_sample_constant = 1.0, vrvi_epoch_slack = 0) \
        .replace('diagnostics', bootstrap_replicates = 50)
