"""Vacillating tableaux for odd orthogonal groups.

Bijections between vacillating tableaux and pairs of a standard Young
tableau with an orthogonal Littlewood-Richardson tableau, together with
the descent statistics and quasisymmetric character expansions they carry.
"""

__version__ = "0.1.0"
