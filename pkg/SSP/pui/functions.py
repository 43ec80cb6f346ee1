#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from fractions import Fraction

from ..core.config import RESTRICTED, UNRESTRICTED
from ..core.exceptions import invalidParameter
from ..core.functions import is_power_of_two, log2_exact

################################################################################
#
#    Closed-form Toffoli counts of partial unary iteration
#
################################################################################

def pui_selection_cost( w, l_log, covered = None ):
    """
        Toffolis spent selecting intervals of size 2^l_log in a 2^w address
        space with unrestricted iterations: 2^(w-l)((w-l)/2 - 1) + 1 when
        every interval is covered, and covered((w-l)/2 - 1) + 1 when only
        `covered` of them are.

        :param w: Address width.
        :type w: int

        :param l_log: log2 of the interval size.
        :type l_log: int

        :param covered: Number of covered intervals (all when None).
        :type covered: int

        :return: Exact value.
        :rtype: Fraction

        :raise invalidParameter: if l_log > w

        Usage:

            >>> from SSP.pui.functions import pui_selection_cost
            >>> pui_selection_cost( 2, 0 ), pui_selection_cost( 1, 0 )
            (Fraction(1, 1), Fraction(0, 1))
            >>> pui_selection_cost( 5, 2, 5 )
            Fraction(7, 2)
            >>> pui_selection_cost( 2, 3 )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    if not 0 <= l_log <= w:
        raise invalidParameter( "interval of 2^%d addresses in a 2^%d address space" % ( l_log, w ) )

    k = w - l_log
    count = 2 ** k if covered is None else covered

    return count * ( Fraction( k, 2 ) - 1 ) + 1

def pui_total_cost( S, m, n_intervals = None, mode = UNRESTRICTED ):
    """
        Toffoli count of zeroing `n_intervals` aligned intervals of size `m`
        in an address space of size `S`: (m + log(S/m)/2 - 2) per interval
        for unrestricted iterations, plus one when m = 1, and (m + log(S/m) - 2) per interval for
        restricted ones.

        :raise notPowerOfTwo: if S or m is not a power of two

        Usage:

            >>> from SSP.pui.functions import pui_total_cost
            >>> pui_total_cost( 8, 4 )
            Fraction(5, 1)
            >>> pui_total_cost( 8, 4, 2, "restricted" )
            Fraction(6, 1)
            >>> pui_total_cost( 64, 64 )
            Fraction(62, 1)
            >>> pui_total_cost( 8, 1 ), pui_total_cost( 128, 1 )
            (Fraction(5, 1), Fraction(321, 1))
            >>> pui_total_cost( 8, 3 )
            Traceback (most recent call last):
                ...
            notPowerOfTwo
    """
    p = log2_exact( m )
    w = log2_exact( S )

    if p > w:
        raise invalidParameter( "interval of %d addresses in a space of %d" % ( m, S ) )

    k = w - p
    count = S // m if n_intervals is None else n_intervals

    if mode == UNRESTRICTED:
        return count * ( m + Fraction( k, 2 ) - 2 ) + ( 1 if m == 1 and count > 0 else 0 )

    elif mode == RESTRICTED:
        return Fraction( count * ( m + k - 2 ) )

    else:
        raise invalidParameter( "unknown PUI mode '%s'" % mode )

def pui_interval_bound( w, l, r ):
    """
        Toffoli bound for one iteration over any interval [l, r], aligned or
        not: one AND per branching node (r - l of them) plus at most two
        single-child nodes per level.

            >>> from SSP.pui.functions import pui_interval_bound
            >>> pui_interval_bound( 3, 4, 6 )
            7
            >>> pui_interval_bound( 0, 0, 0 )
            0
    """
    return max( 0, ( r - l + 1 ) + 2 * ( w - 1 ) )

def pui_bound( w, l, r ):
    """
        Toffoli bound of one iteration: the exact restricted count
        m + log(2^w/m) - 2 for an aligned interval of power-of-two size m (an
        unrestricted iteration never costs more), the generic interval bound
        otherwise.

            >>> from SSP.pui.functions import pui_bound
            >>> pui_bound( 3, 0, 3 ), pui_bound( 3, 4, 7 ), pui_bound( 3, 4, 6 )
            (3, 3, 7)
    """
    m = r - l + 1

    if is_power_of_two( m ) and l % m == 0:
        return max( 0, m + w - log2_exact( m ) - 2 )

    return pui_interval_bound( w, l, r )
