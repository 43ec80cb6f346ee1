#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from fractions import Fraction

from ..core.exceptions import invalidParameter

################################################################################
#
#    Angle lookups of the dense state preparation
#
#        One lookup per rotation k = 2 .. l, on a k-qubit address register.
#
################################################################################

def qrom_sum( l ):
    """
        Toffolis of the plain QROM lookups, summed term by term:
        sum( 2^k - 2 for k = 2 .. l ).

            >>> from SSP.costmodel.functions import qrom_sum
            >>> qrom_sum( 3 ), qrom_sum( 1 ), qrom_sum( 10 )
            (8, 0, 2026)
    """
    return sum( 2 ** k - 2 for k in range( 2, l + 1 ) )

def qrom_closed_form( l ):
    """
            >>> from SSP.costmodel.functions import qrom_closed_form
            >>> qrom_closed_form( 3 )
            8
    """
    return 2 ** ( l + 1 ) - 2 * l - 2

def _lookup( k, b, r ):
    if r == 0:
        return Fraction( 2 ** k - 2 )

    return Fraction( 2 ** k, 2 ** r ) + b * ( 2 ** r - 1 )

def qroam_sum( l, b, r, clamp = False ):
    """
        Toffolis of the clean QROAM lookups with a single split exponent `r`,
        summed term by term: sum( 2^(k-r) + b(2^r - 1) for k = 2 .. l ).

        With a split exponent larger than the address of the small lookups,
        2^(k-r) is not an integer. With `clamp = True` the exponent of the
        lookup on k qubits is min( r, k - 1 ) instead.

        :param l: Width of the subspace register.
        :type l: int

        :param b: Bits of the rotation angles.
        :type b: int

        :param r: Split exponent (0 is the plain QROM).
        :type r: int

        :return: Exact value.
        :rtype: Fraction

        Usage:

            >>> from SSP.costmodel.functions import qroam_sum
            >>> qroam_sum( 10, 20, 3 )
            Fraction(3031, 2)
            >>> qroam_sum( 10, 20, 3, clamp = True )
            Fraction(1318, 1)
            >>> qroam_sum( 3, 20, 0 )
            Fraction(8, 1)
    """
    if r == 0:
        return Fraction( qrom_sum( l ) )

    total = Fraction( 0 )
    for k in range( 2, l + 1 ):
        rk = min( r, k - 1 ) if clamp else r
        total += _lookup( k, b, rk )

    return total

def qroam_closed_form( l, b, r ):
    """
        b(l - 1)(2^r - 1) + (2^l - 2)2^(1-r), for l >= 1 and r >= 1.

            >>> from SSP.costmodel.functions import qroam_closed_form
            >>> qroam_closed_form( 10, 20, 3 )
            Fraction(3031, 2)
    """
    return b * ( l - 1 ) * ( 2 ** r - 1 ) + Fraction( 2 ** l - 2, 2 ** ( r - 1 ) )

def sign_fix_sum( l, r ):
    """
        Toffolis of the final sign fixes on the subspace register: a lookup
        table on l - 1 qubits (2^(l-1) - 2) for r = 0, the QROAM-like
        construction (2^(l-r) + 2^r) otherwise.

            >>> from SSP.costmodel.functions import sign_fix_sum
            >>> sign_fix_sum( 5, 0 ), sign_fix_sum( 10, 3 ), sign_fix_sum( 1, 0 )
            (14, 136, 0)
    """
    if r == 0:
        return max( 2 ** ( l - 1 ) - 2, 0 ) if l >= 1 else 0

    return 2 ** ( l - r ) + 2 ** r

def real_angle_sum( l, b, r ):
    """
        Angle lookups of a real state: the phase rotation is dropped, so only
        the rotations k = 2 .. l - 1 remain.

            >>> from SSP.costmodel.functions import real_angle_sum
            >>> real_angle_sum( 3, 20, 0 )
            Fraction(2, 1)
    """
    return qroam_sum( max( l - 1, 0 ), b, r, clamp = True )

################################################################################
#
#    Per-lookup optimal split
#
################################################################################

def optimal_r( k, b ):
    """
        Split exponent minimising the Toffoli count of one lookup on `k`
        address qubits; 2^r is then close to sqrt( 2^k / b ).

            >>> from SSP.costmodel.functions import optimal_r
            >>> optimal_r( 10, 20 ), optimal_r( 2, 20 )
            (3, 0)
    """
    if k < 1:
        raise invalidParameter( "lookup on %d address qubits" % k )

    return min( range( k ), key = lambda r: ( _lookup( k, b, r ), r ) )

def dense_prep_optimal( l, b ):
    """
        Angle lookups with the optimal split chosen for every lookup.

        :return: Total Toffoli count and the split exponent of every lookup k = 2 .. l.
        :rtype: tuple

        Usage:

            >>> from SSP.costmodel.functions import dense_prep_optimal
            >>> dense_prep_optimal( 4, 1 )
            (Fraction(14, 1), [0, 1, 2])
    """
    rs = [ optimal_r( k, b ) for k in range( 2, l + 1 ) ]
    total = sum( ( _lookup( k, b, r ) for k, r in zip( range( 2, l + 1 ), rs ) ), Fraction( 0 ) )

    return total, rs
