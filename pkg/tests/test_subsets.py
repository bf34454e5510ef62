import numpy as np
import pytest

from mrlrc.subsets import (
    bits_of,
    format_indices,
    full_mask,
    lowest_bits,
    mask_of,
    masks_of_size,
    parse_indices,
    popcount,
    popcount_array,
    submasks,
)


def test_mask_roundtrip():
    m = mask_of([0, 3, 5])
    assert bits_of(m) == [0, 3, 5]
    assert popcount(m) == 3
    assert parse_indices(format_indices(m)) == m
    assert parse_indices("") == 0
    assert format_indices(0) == ""


def test_full_mask_bounds():
    assert full_mask(0) == 0
    assert full_mask(3) == 0b111
    with pytest.raises(ValueError):
        full_mask(65)


def test_lowest_bits():
    assert lowest_bits(0b110110, 2) == 0b110
    assert lowest_bits(0b110110, 4) == 0b110110
    with pytest.raises(ValueError):
        lowest_bits(0b11, 3)


def test_submasks_sorted_and_complete():
    subs = submasks(0b1010)
    assert subs == [0b0000, 0b0010, 0b1000, 0b1010]
    assert len(submasks(0b1111)) == 16


def test_masks_of_size():
    got = list(masks_of_size(0b1111, 2))
    assert len(got) == 6
    assert all(popcount(m) == 2 for m in got)


def test_popcount_array_matches_python():
    rng = np.random.default_rng(0)
    vals = rng.integers(0, 1 << 62, size=1000, dtype=np.int64)
    expect = np.array([int(v).bit_count() for v in vals])
    assert (popcount_array(vals) == expect).all()
