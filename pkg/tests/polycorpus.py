import random


def random_expr(rng, j):
    """A grammar-valid expression with random spacing, signs and factor order."""
    terms = []
    for _ in range(rng.randint(1, 5)):
        kind = rng.random()
        if kind < 0.25:
            body = f"e{rng.randint(1, (2 * j - 1) * (j - 1))}"
        else:
            k, i = rng.randint(-3, 4), rng.randint(0, 5)
            factors = []
            if k or rng.random() < 0.2:
                factors.append("z" if k == 1 and rng.random() < 0.5 else f"z^{k:+d}" if rng.random() < 0.3 else f"z^{k}")
            if i or not factors:
                factors.append("u" if i == 1 and rng.random() < 0.5 else f"u^{i}")
            rng.shuffle(factors)
            body = rng.choice(["*", "", " "]).join(factors)
        if rng.random() < 0.6:
            num, den = rng.randint(1, 40), rng.choice([1, 1, 2, 3, 7, 12])
            coef = f"{num}/{den}" if den > 1 else str(num)
            body = coef + rng.choice(["*", " ", "*"]) + body
        sign = rng.choice(["+", "-"]) if terms or rng.random() < 0.3 else ""
        terms.append(f"{sign}{rng.choice(['', ' '])}{body}")
    return rng.choice([" ", ""]).join(terms)


def corpus(n=200, seed=11):
    rng = random.Random(seed)
    return [(j, random_expr(rng, j)) for j in (rng.choice([2, 3, 4]) for _ in range(n))]
