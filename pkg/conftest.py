"""
Shared test fixtures
====================
Small synthetic images and corpora written to pytest's tmp_path.
"""

import sys
import os

import numpy as np
import pytest

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from gradpix.image.png_io import image_from_array, save_png  # noqa: E402
from gradpix.image.synthetic import generate_synthetic  # noqa: E402

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


@pytest.fixture
def fixtures_dir():
    from pathlib import Path
    return Path(FIXTURES_DIR)


@pytest.fixture
def grid3x3():
    """3x3 8-bit gray image with samples 0..8 row-major."""
    return image_from_array(np.arange(9).reshape(3, 3), 8)


@pytest.fixture
def small_corpus(tmp_path):
    """Directory with four small PNGs of mixed kinds and layouts."""
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    images = {
        "edges_gray.png": generate_synthetic("flat_edges", 24, 20, seed=1),
        "edges_rgb.png": generate_synthetic("flat_edges", 17, 13, seed=2, channels=3),
        "ramp16.png": generate_synthetic("ramp", 16, 9, seed=3, bit_depth=16),
        "noise.png": generate_synthetic("uniform_noise", 12, 12, seed=4),
    }
    for name, img in images.items():
        save_png(img, corpus / name)
    return corpus


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
