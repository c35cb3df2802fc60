"""Multiplicity bookkeeping for modules over the line group H.

An H-decomposition is a ``Counter`` mapping a weight to the multiplicity of
the simple ``L_weight``; a decomposition over ``H(0) = H x H`` is a ``Counter``
of weight pairs.  Only multiplicities are tracked, never the modules.
"""
from __future__ import annotations

from collections import Counter
from math import comb

from .weights import BLACK, WHITE, all_weights, contractions, cyclic_contraction, cyclic_shift, \
    rotations, transpose_weight


def weight_key(lam: str):
    return (len(lam), lam)


def canonical(dec: Counter) -> dict:
    """Sorted plain dict, zero entries dropped."""
    keys = sorted((k for k, v in dec.items() if v), key=_pair_key if _is_pairs(dec) else weight_key)
    return {k: dec[k] for k in keys}


def _is_pairs(dec) -> bool:
    return any(isinstance(k, tuple) for k in dec)


def _pair_key(pair):
    return (weight_key(pair[0]), weight_key(pair[1]))


def h_length(dec: Counter) -> int:
    return sum(dec.values())


def res_to_H0(lam: str) -> Counter:
    """Restriction of L_lam from H to H(0) = H x H, as weight pairs."""
    n = len(lam)
    out = Counter()
    for i in range(n + 1):
        out[lam[:i], lam[i:]] += 1          # L_{lam[1,i]} x L_{lam(i,n]}
    for i in range(1, n + 1):
        out[lam[:i - 1], lam[i:]] += 1      # L_{lam[1,i)} x L_{lam(i,n]}
    return out


def ind_from_H0(mu: str, nu: str) -> Counter:
    return Counter({mu + BLACK + nu: 1}) + Counter({mu + WHITE + nu: 1}) + Counter({mu + nu: 1})


def mackey_res_ind(lam: str) -> Counter:
    """Res^G_H Ind_H^G L_lam through the two double cosets of H in G."""
    out = Counter({lam: 1})                 # trivial double coset
    for (mu, nu), k in res_to_H0(lam).items():
        # conjugation swaps the two factors of H(0)
        for w, c in ind_from_H0(nu, mu).items():
            out[w] += k * c
    return out


def A_decomp(lam: str) -> Counter:
    """All n rotations and all n contractions, with repetition; zero for the empty weight."""
    n = len(lam)
    out = Counter()
    for i in range(1, n + 1):
        out[cyclic_shift(lam, i)] += 1
        out[cyclic_contraction(lam, i)] += 1
    return out


def Abar_decomp(lam: str) -> Counter:
    """The N(lam) distinct rotations plus the N(lam) distinct contractions."""
    if not lam:
        return Counter()
    return Counter(rotations(lam)) + Counter(contractions(lam))


def induced_H_decomp(lam: str) -> Counter:
    """I_lam = Ind_H^G L_lam restricted to H, by the closed form A(l) + A(l.) + A(l o)."""
    return A_decomp(lam) + A_decomp(lam + BLACK) + A_decomp(lam + WHITE)


def transpose_decomp(dec: Counter) -> Counter:
    return Counter({transpose_weight(w): c for w, c in dec.items()})


def invariant_dim(lam: str, s: int) -> int:
    """Dimension of the H(a)-invariants of L_lam for |a| = s points."""
    return comb(len(lam), s)


def schwartz_h_decomp(n: int) -> Counter:
    """Schwartz space of n ordered points on the line: binom(n, len mu) copies of L_mu."""
    out = Counter()
    for k in range(n + 1):
        for mu in all_weights(k):
            out[mu] = comb(n, k)
    return out

