import pytest

from pbwcheck.gadgets.utils import Cache, Stopwatch, env, is_like_list


@pytest.mark.parametrize('value, var_type, expected', [
    ('12', int, 12),
    ('no', bool, False),
    ('yes', bool, True),
    ('DEBUG', str, 'DEBUG'),
])
def test_env(monkeypatch, value, var_type, expected):
    monkeypatch.setenv('PBWCHECK_TEST_VALUE', value)

    assert env('PBWCHECK_TEST_VALUE', None, var_type) == expected


def test_env_default(monkeypatch):
    monkeypatch.delenv('PBWCHECK_TEST_VALUE', raising=False)

    assert env('PBWCHECK_TEST_VALUE', 10, int) == 10


def test_cache_evicts_least_recent():
    cache = Cache(max_size=2)
    cache.add_or_update('a', 1)
    cache.add_or_update('b', 2)
    cache.get('a')
    cache.add_or_update('c', 3)

    assert len(cache) == 2
    assert (cache.get('a'), cache.get('c')) == (1, 3)
    assert cache.get('b', 0) == 0


def test_cache_slack():
    cache = Cache(max_size=4, slack=0.5)
    for i in range(6):
        cache.add_or_update(i, i)

    assert len(cache) == 6
    cache.add_or_update(6, 6)
    assert len(cache) == 4
    assert cache.get(0) is None
    assert cache.get(6) == 6


def test_stopwatch():
    watch = Stopwatch()
    with watch.lap('a'):
        pass

    with watch.lap('a'):
        pass

    assert list(watch.laps) == ['a']
    assert watch.total >= 0


def test_is_like_list():
    assert is_like_list((1, 2))
    assert not is_like_list('ab')
    assert not is_like_list({'a': 1})
