import random

from entropica.distributions import from_counts, from_probabilities

# (criterion, passed, detail) rows printed in the terminal summary
ACCEPTANCE_RESULTS = []


def random_distribution(rng: random.Random, min_size=1, max_size=64, zeros=True):
    """Random distribution; count- or probability-origin, sometimes with zero entries."""
    k = rng.randint(min_size, max_size)
    ids = rng.sample(range(1000), k)
    if rng.random() < 0.5:
        counts = [rng.choice((0, 1, 1, 2, 3, 5, 8, 50, 1000)) if zeros else rng.randint(1, 200)
                  for _ in ids]
        if sum(counts) == 0:
            counts[0] = 1
        return from_counts(list(zip(ids, counts)))
    w = [rng.random() ** 3 for _ in ids]
    if zeros and k > 1 and rng.random() < 0.3:
        w[rng.randrange(k)] = 0.0
    if sum(w) == 0:
        w[0] = 1.0
    s = sum(w)
    return from_probabilities([(i, x / s) for i, x in zip(ids, w)])
