import itertools

from hypothesis import settings

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


def all_perms(n):
    return itertools.permutations(range(1, n + 1))
