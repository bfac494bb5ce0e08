#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
    CeConfig class definition

    License: GNU Affero General Public License v3.0
"""

import math

from twophase.errors import value_error
from twophase.utils import checked_float, checked_int

INITS = ("uniform", "weighted")


class CeConfig(object):
    """
    Defines the settings of the FACE optimizer.

    Size-dependent settings left as None are resolved against the number of
    candidate nodes n by `resolved`.

    Parameters
    ----------
    n_min : int
        draws per iteration before any growth; defaults to n.
    n_max : int
        the most draws per iteration; defaults to 20n.
    n_elite : int
        elite samples per iteration; defaults to ceil(n / 4).
    alpha : float
        smoothing factor in (0, 1].
    max_iterations : int
        iteration cap.
    reliability_tol : float
        relative change of the elite threshold below which a solution is
        reliable.
    degenerate_tol : float
        distance to {0, 1} below which every probability counts as settled.
    adaptive_draws : bool
        double the draws of an iteration, up to n_max, while the elite
        threshold does not improve on the previous iteration's.
    init : str
        'uniform' (q_i = k / n) or 'weighted' (q_i proportional to GDD weights).

    """

    def __init__(
        self,
        n_min=None,
        n_max=None,
        n_elite=None,
        alpha=0.6,
        max_iterations=20,
        reliability_tol=1e-3,
        degenerate_tol=0.01,
        adaptive_draws=True,
        init="uniform",
    ):
        self.n_min = n_min
        self.n_max = n_max
        self.n_elite = n_elite
        self.alpha = alpha
        self.max_iterations = max_iterations
        self.reliability_tol = reliability_tol
        self.degenerate_tol = degenerate_tol
        self.adaptive_draws = adaptive_draws
        self.init = init

    @property
    def n_min(self):
        return self.__n_min

    @n_min.setter
    def n_min(self, n_min):
        self.__n_min = None if n_min is None else checked_int("n_min", n_min, low=1)

    @property
    def n_max(self):
        return self.__n_max

    @n_max.setter
    def n_max(self, n_max):
        self.__n_max = None if n_max is None else checked_int("n_max", n_max, low=1)

    @property
    def n_elite(self):
        return self.__n_elite

    @n_elite.setter
    def n_elite(self, n_elite):
        self.__n_elite = None if n_elite is None else checked_int("n_elite", n_elite, low=1)

    @property
    def alpha(self):
        return self.__alpha

    @alpha.setter
    def alpha(self, alpha):
        alpha = checked_float("alpha", alpha, low=0.0, high=1.0)
        if alpha == 0.0:
            raise value_error("alpha", "0 < alpha <= 1", alpha)
        self.__alpha = alpha

    @property
    def max_iterations(self):
        return self.__max_iterations

    @max_iterations.setter
    def max_iterations(self, max_iterations):
        self.__max_iterations = checked_int("max_iterations", max_iterations, low=1)

    @property
    def reliability_tol(self):
        return self.__reliability_tol

    @reliability_tol.setter
    def reliability_tol(self, tol):
        self.__reliability_tol = checked_float("reliability_tol", tol, low=0.0)

    @property
    def degenerate_tol(self):
        return self.__degenerate_tol

    @degenerate_tol.setter
    def degenerate_tol(self, tol):
        self.__degenerate_tol = checked_float("degenerate_tol", tol, low=0.0, high=0.5)

    @property
    def adaptive_draws(self):
        return self.__adaptive_draws

    @adaptive_draws.setter
    def adaptive_draws(self, adaptive_draws):
        if not isinstance(adaptive_draws, bool):
            raise value_error("adaptive_draws", "True or False", adaptive_draws)
        self.__adaptive_draws = adaptive_draws

    @property
    def init(self):
        return self.__init

    @init.setter
    def init(self, init):
        if init not in INITS:
            raise value_error("init", "one of {}".format(INITS), init)
        self.__init = init

    def resolved(self, n):
        """Returns a copy with the size-dependent defaults filled in for n nodes."""

        n = max(int(n), 1)
        fields = self.as_dict()
        if fields["n_min"] is None:
            fields["n_min"] = n
        if fields["n_max"] is None:
            fields["n_max"] = max(20 * n, fields["n_min"])
        if fields["n_elite"] is None:
            fields["n_elite"] = min(int(math.ceil(n / 4.0)), fields["n_min"])

        if fields["n_min"] > fields["n_max"]:
            raise value_error("n_min", "n_min <= n_max = {}".format(fields["n_max"]), fields["n_min"])
        if fields["n_elite"] > fields["n_min"]:
            raise value_error(
                "n_elite", "n_elite <= n_min = {}".format(fields["n_min"]), fields["n_elite"]
            )

        return CeConfig(**fields)

    def as_dict(self):
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "n_elite": self.n_elite,
            "alpha": self.alpha,
            "max_iterations": self.max_iterations,
            "reliability_tol": self.reliability_tol,
            "degenerate_tol": self.degenerate_tol,
            "adaptive_draws": self.adaptive_draws,
            "init": self.init,
        }

    def __repr__(self):
        return "CeConfig({})".format(
            ", ".join("{}={}".format(k, v) for k, v in self.as_dict().items())
        )
