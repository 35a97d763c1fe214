"""Random parser inputs: token soup plus single-character mutations of valid lines."""

import random

TOKENS = ["w", "ω", "1", "2", "3/4", "0", "1/0", "12345678901234567890", "+", "-", "*", "^",
          "(", ")", "{", "}", "|", ",", " ", "x", "let", "=", ":", "eval", "sign", "rank",
          "cmp", "simpler", "oz", "ozfloor", "nf", "check", "height", "convex", "show",
          "defgroup", "defdomain", "gadd", "gmul", "help", ";", "#", "\t", "é", "\x00"]

SEEDS = ["w + 1/2", "{0 | 1}", "w^(1/2)*2 - 3", "{0, 1 | w}", "let x = w - 1", ":sign 3/4",
         ":rank w^-1", ":cmp w, w + 1", ":simpler 1/2, w^-1", ":oz w - 1", ":ozfloor w + 1/2",
         ":nf w^(w^-1)*(1/2)", ":gadd 1/2, 1/4", ":gmul -1, 3/4",
         ":defgroup g kind: group; gamma: finite {0}; coeff 0 => integers", ":check g",
         ":height g", ":convex g 1", ":show g", "(w + 1)*(w - 1)", "w^-3 - {w | }"]


def token_soup(rng):
    return "".join(rng.choice(TOKENS) for _ in range(rng.randint(0, 14)))


def mutate(rng, text):
    chars = list(text)
    for _ in range(rng.randint(1, 3)):
        op = rng.randrange(3)
        pos = rng.randint(0, len(chars))
        if op == 0 or not chars:
            chars.insert(pos, rng.choice("w1/^(){}|,-+*:= "))
        elif op == 1:
            del chars[min(pos, len(chars) - 1)]
        else:
            chars[min(pos, len(chars) - 1)] = rng.choice("w0/^(){}|,-+*:= x")
    return "".join(chars)


def expr(rng, depth=3):
    """A syntactically valid expression."""
    k = rng.randrange(8 if depth > 0 else 3)
    if k == 0:
        return rng.choice(["0", "1", "2", "1/2", "3/4", "5/8", "1/3", "7"])
    if k == 1:
        return "w"
    if k == 2:
        return "w^" + rng.choice(["2", "-1", "(1/2)", "w", "-2", "(w^-1)"])
    if k == 3:
        return "%s %s %s" % (expr(rng, depth - 1), rng.choice("+-*"), expr(rng, depth - 1))
    if k == 4:
        return "-(%s)" % expr(rng, depth - 1)
    if k == 5:
        return "w^(%s)" % expr(rng, depth - 1)
    if k == 6:
        return "(%s)" % expr(rng, depth - 1)
    left = ", ".join(expr(rng, depth - 2) for _ in range(rng.randint(0, 2)))
    right = ", ".join(expr(rng, depth - 2) for _ in range(rng.randint(0, 2)))
    return "{%s | %s}" % (left, right)


def valid_line(rng):
    verb = rng.choice(["", "eval", "nf", "sign", "rank", "oz", "ozfloor", "cmp", "simpler",
                       "gadd", "gmul"])
    if not verb:
        return expr(rng)
    if verb in ("cmp", "simpler", "gadd", "gmul"):
        return ":%s %s, %s" % (verb, expr(rng), expr(rng))
    return ":%s %s" % (verb, expr(rng))


def inputs(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        u = rng.random()
        if u < 0.35:
            yield token_soup(rng)
        elif u < 0.7:
            yield mutate(rng, rng.choice(SEEDS))
        else:
            yield valid_line(rng)
