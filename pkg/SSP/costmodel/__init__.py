#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from collections import OrderedDict, namedtuple
from fractions import Fraction

import math

import numpy as np

from ..core.config import DEFAULT_ANGLE_BITS, ISOMETRY_MODES, LEMMA_MAX_BITS, MALVETTI, RESTRICTED_PHASE, UNRESTRICTED
from ..core.exceptions import invalidParameter
from ..core.functions import ceil_log2, is_power_of_two, log2_exact, max_power_of_two
from ..core.logger import debug

from .functions import qrom_sum, qroam_sum, real_angle_sum, sign_fix_sum

Bound = namedtuple( "Bound", [ "raw", "value", "ceiling", "qubits" ] )
LemmaCheck = namedtuple( "LemmaCheck", [ "S", "bound", "holds" ] )
LemmaTable = namedtuple( "LemmaTable", [ "r", "S", "twice_bound", "holds" ] )
ImprovementRow = namedtuple( "ImprovementRow", [ "s", "n", "factor", "best" ] )

def _bound( raw, qubits ):
    raw = Fraction( raw )
    value = max( raw, Fraction( 0 ) )

    return Bound( raw, value, int( math.ceil( value ) ), qubits )

################################################################################
#
#    Parameters of the whole preparation pipeline
#
################################################################################

class PipelineParams( object ):
    """
        Parameters of a sparse state preparation: `s` basis states on `n`
        qubits, angles on `b` bits, QROAM split exponent `r` (0 for the plain
        QROM), whether the amplitudes are real, the isometry used and,
        optionally, the batch size of the batched isometry (a power of two
        not above n - l; the largest one by default).

            >>> from SSP.costmodel import PipelineParams
            >>> p = PipelineParams( 7, 7 )
            >>> p
            PipelineParams( n=7, s=7, b=20, r=0, unrestricted )
            >>> p.l, p.s_tilde, p.m, p.p
            (3, 8, 4, 2)
            >>> PipelineParams( 7, 7, batch = 2 ).m
            2
            >>> PipelineParams( 7, 7, batch = 3 )
            Traceback (most recent call last):
                ...
            invalidParameter
            >>> PipelineParams( 2, 5 )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    def __init__( self, n, s, b = DEFAULT_ANGLE_BITS, r = 0, real_state = False, isometry_mode = UNRESTRICTED, batch = None ):
        if s < 1:
            raise invalidParameter( "empty support" )

        if n < 0 or s > 2 ** n:
            raise invalidParameter( "%d basis states do not fit on %d qubits" % ( s, n ) )

        if b < 1 or r < 0:
            raise invalidParameter( "angle bits %d and split exponent %d" % ( b, r ) )

        if isometry_mode not in ISOMETRY_MODES:
            raise invalidParameter( "unknown isometry '%s'" % isometry_mode )

        self.n = int( n )
        self.s = int( s )
        self.b = int( b )
        self.r = int( r )
        self.real_state = bool( real_state )
        self.isometry_mode = isometry_mode
        self.batch = None if batch is None else int( batch )

        if batch is not None and not ( is_power_of_two( batch ) and batch <= n - self.l ):
            raise invalidParameter( "batch of %s rows with %d free qubits" % ( batch, n - self.l ) )

    @property
    def l( self ):
        return ceil_log2( self.s )

    @property
    def s_tilde( self ):
        return 2 ** self.l

    @property
    def m( self ):
        """
            Batch size: largest power of two not above n - l, unless set.
        """
        if self.batch is not None:
            return self.batch

        return max_power_of_two( self.n - self.l )

    @property
    def p( self ):
        return log2_exact( self.m ) if self.m else None

    def replace( self, **kwargs ):
        """
            Copy with some parameters changed.

                >>> from SSP.costmodel import PipelineParams
                >>> PipelineParams( 7, 7 ).replace( r = 2, isometry_mode = "malvetti" )
                PipelineParams( n=7, s=7, b=20, r=2, malvetti )
        """
        values = dict( n = self.n, s = self.s, b = self.b, r = self.r, real_state = self.real_state, isometry_mode = self.isometry_mode, batch = self.batch )
        values.update( kwargs )

        return PipelineParams( **values )

    def __repr__( self ):
        return "PipelineParams( n=%d, s=%d, b=%d, r=%d, %s%s%s )" % (
            self.n, self.s, self.b, self.r, self.isometry_mode,
            ", real" if self.real_state else "",
            "" if self.batch is None else ", m=%d" % self.batch
        )

################################################################################
#
#    Closed-form bounds
#
################################################################################

def isometry_bound( params ):
    """
        Worst-case Toffoli count and qubit count of the isometry stage.

        With m the largest power of two not above n - l, m = 2^p:

            unrestricted        ceil(s/m)(2m + (l - p)/2 - 3) + (2l - p)    n + l - 1 qubits
            restricted_phase    ceil(s/m)(2m + l - p - 3)                   n + l + 1 qubits
            malvetti            s(l - 1)                                    n + l - 2 qubits
            fomichev            s(2l - 2) + 2^l                             n + 5l - 3 qubits

        When n = l nothing is to be done by the unrestricted isometry; the
        restricted one still fixes the signs, with at most 2^l - 2 Toffolis.
        Negative raw values are clamped to 0.

        :param params: Pipeline parameters.
        :type params: PipelineParams

        :return: Raw and clamped values, ceiling and qubit count.
        :rtype: Bound

        Usage:

            >>> from SSP.costmodel import PipelineParams, isometry_bound
            >>> for mode in ( "unrestricted", "restricted_phase", "malvetti", "fomichev" ):
            ...     b = isometry_bound( PipelineParams( 7, 7, isometry_mode = mode ) )
            ...     print( mode, b.ceiling, b.qubits )
            unrestricted 15 9
            restricted_phase 12 11
            malvetti 14 8
            fomichev 36 19
            >>> isometry_bound( PipelineParams( 3, 8 ) ).value
            Fraction(0, 1)
    """
    n, s, l, m, p = params.n, params.s, params.l, params.m, params.p
    batches = -( -s // m ) if m else 0
    mode = params.isometry_mode

    if mode == UNRESTRICTED:
        raw = 0 if m == 0 else batches * ( 2 * m + Fraction( l - p, 2 ) - 3 ) + ( 2 * l - p )
        qubits = n + max( l - 1, 0 )

    elif mode == RESTRICTED_PHASE:
        raw = params.s_tilde - 2 if m == 0 else batches * ( 2 * m + l - p - 3 )
        qubits = n + l + 1

    elif mode == MALVETTI:
        raw = s * ( l - 1 )
        qubits = n + max( l - 2, 0 )

    else:
        raw = s * ( 2 * l - 2 ) + params.s_tilde
        qubits = n + max( 5 * l - 3, 0 )

    return _bound( raw, qubits )

def sign_fix_placement( params ):
    """
        Where the final sign fixes are paid: in the dense preparation after
        an unrestricted isometry, inside the isometry otherwise.
    """
    return "dense_prep" if params.isometry_mode == UNRESTRICTED else "isometry"

def dense_prep_bound( params ):
    """
        Worst-case Toffoli count of the dense preparation on the l-qubit
        subspace register, with s~ = 2^l:

            sign fix in dense prep      3s~/2^r + (bl - b + 1)(2^r - 1)
            sign fix in isometry        2s~/2^r + b(l - 1)(2^r - 1)
            real state                  s~/2^r + b(l - 2)(2^r - 1)

        The real-state row applies to the restricted isometry only. The
        register holds b2^r - r + 2l qubits.

        :raise invalidParameter: if 0 < r and r >= l

        Usage:

            >>> from SSP.costmodel import PipelineParams, dense_prep_bound
            >>> dense_prep_bound( PipelineParams( 20, 1024, r = 3 ) ).value
            Fraction(1651, 1)
            >>> dense_prep_bound( PipelineParams( 20, 1024, r = 3, isometry_mode = "restricted_phase" ) ).value
            Fraction(1516, 1)
            >>> dense_prep_bound( PipelineParams( 20, 1024, r = 3, real_state = True, isometry_mode = "restricted_phase" ) ).value
            Fraction(1248, 1)
            >>> dense_prep_bound( PipelineParams( 20, 1024, r = 10 ) )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    l, b, r = params.l, params.b, params.r

    if r > 0 and r >= l:
        raise invalidParameter( "split exponent %d on a %d-qubit subspace register" % ( r, l ) )

    scale = Fraction( params.s_tilde, 2 ** r )
    spread = 2 ** r - 1

    if params.real_state and params.isometry_mode == RESTRICTED_PHASE:
        raw = scale + b * ( l - 2 ) * spread

    elif sign_fix_placement( params ) == "dense_prep":
        raw = 3 * scale + ( b * l - b + 1 ) * spread

    else:
        raw = 2 * scale + b * ( l - 1 ) * spread

    return _bound( raw, b * 2 ** r - r + 2 * l )

def dense_prep_exact( params ):
    """
        Toffoli count of the dense preparation summed lookup by lookup, the
        split exponent clamped on the small lookups.

            >>> from SSP.costmodel import PipelineParams, dense_prep_exact
            >>> dense_prep_exact( PipelineParams( 20, 1024 ) )
            Fraction(2536, 1)
    """
    l, b, r = params.l, params.b, params.r

    if params.real_state and params.isometry_mode == RESTRICTED_PHASE:
        return real_angle_sum( l, b, r )

    total = qroam_sum( l, b, r, clamp = True )
    if sign_fix_placement( params ) == "dense_prep":
        total += sign_fix_sum( l, r )

    return total

################################################################################
#
#    Cost report
#
################################################################################

class CostReport( object ):
    """
        Toffoli and qubit estimate of the whole pipeline. The total Toffoli
        count is the sum of the components; the total qubit count is the
        largest of the two stages.

            >>> from SSP.costmodel import PipelineParams, estimate
            >>> report = estimate( PipelineParams( 7, 7 ) )
            >>> print( report.dump() )
            n=7
            s=7
            b=20
            r=0
            isometry=unrestricted
            real_state=0
            sign_fix=dense_prep
            isometry_toffoli=15
            isometry_qubits=9
            dense_toffoli=24
            dense_qubits=26
            dense_exact=10
            total_toffoli=39
            total_qubits=26
    """
    fields = [
        "n", "s", "b", "r", "isometry", "real_state", "sign_fix",
        "isometry_toffoli", "isometry_qubits",
        "dense_toffoli", "dense_qubits", "dense_exact",
        "total_toffoli", "total_qubits"
    ]

    def __init__( self, params, isometry, dense, dense_exact ):
        self.params = params
        self.isometry_toffoli_bound = isometry.value
        self.isometry_qubits = isometry.qubits
        self.dense_toffoli_bound = dense.value
        self.dense_qubits = dense.qubits
        self.dense_exact = dense_exact
        self.sign_fix = sign_fix_placement( params )

        self.components = OrderedDict()
        self.components[ "isometry" ] = isometry.value

        if self.sign_fix == "dense_prep":
            sign = Fraction( params.s_tilde, 2 ** params.r ) + 2 ** params.r - 1
        else:
            sign = Fraction( 0 )

        self.components[ "angle_lookup" ] = dense.value - sign
        self.components[ "sign_fix" ] = sign

        self.total_toffoli = sum( self.components.values(), Fraction( 0 ) )
        self.total_qubits = max( self.isometry_qubits, self.dense_qubits )

    @staticmethod
    def _text( value ):
        if isinstance( value, Fraction ) and value.denominator == 1:
            return str( value.numerator )

        elif isinstance( value, Fraction ):
            return "%g" % float( value )

        elif isinstance( value, bool ):
            return str( int( value ) )

        return str( value )

    def as_dict( self ):
        p = self.params
        return OrderedDict( [
            ( "n", p.n ),
            ( "s", p.s ),
            ( "b", p.b ),
            ( "r", p.r ),
            ( "isometry", p.isometry_mode ),
            ( "real_state", p.real_state ),
            ( "sign_fix", self.sign_fix ),
            ( "isometry_toffoli", self.isometry_toffoli_bound ),
            ( "isometry_qubits", self.isometry_qubits ),
            ( "dense_toffoli", self.dense_toffoli_bound ),
            ( "dense_qubits", self.dense_qubits ),
            ( "dense_exact", self.dense_exact ),
            ( "total_toffoli", self.total_toffoli ),
            ( "total_qubits", self.total_qubits ),
        ] )

    def as_row( self ):
        return [ self._text( v ) for v in self.as_dict().values() ]

    def dump( self ):
        return "\n".join( "%s=%s" % ( k, self._text( v ) ) for k, v in self.as_dict().items() )

    def __repr__( self ):
        return "CostReport( %s, toffoli=%s, qubits=%d )" % ( self.params.isometry_mode, self._text( self.total_toffoli ), self.total_qubits )

def estimate( params ):
    """
        Estimate the whole pipeline.

        :param params: Pipeline parameters.
        :type params: PipelineParams

        :rtype: CostReport

        Usage:

            >>> from SSP.costmodel import PipelineParams, estimate
            >>> estimate( PipelineParams( 7, 7, isometry_mode = "malvetti" ) )
            CostReport( malvetti, toffoli=30, qubits=26 )
    """
    report = CostReport( params, isometry_bound( params ), dense_prep_bound( params ), dense_prep_exact( params ) )

    debug.debug( "%s: %s" % ( params, report ), 2 )

    return report

def sweep_r( params, r_max = None ):
    """
        Estimate for every split exponent 0 .. r_max (at most l - 1).

            >>> from SSP.costmodel import PipelineParams, sweep_r
            >>> [ int( rep.total_toffoli ) for rep in sweep_r( PipelineParams( 20, 1024 ), 3 ) ]
            [5201, 3846, 3440, 3780]
    """
    top = params.l - 1 if r_max is None else min( r_max, params.l - 1 )

    return [ estimate( params.replace( r = r ) ) for r in range( 0, max( top, 0 ) + 1 ) ]

def optimal_split( params, r_max = None ):
    """
        Cheapest estimate over the split exponents; ties go to the smaller r.

            >>> from SSP.costmodel import PipelineParams, optimal_split
            >>> optimal_split( PipelineParams( 20, 1024 ) ).params.r
            2
    """
    return min( sweep_r( params, r_max ), key = lambda rep: ( rep.total_toffoli, rep.params.r ) )

################################################################################
#
#    Improvement over the linear-Toffoli baseline
#
################################################################################

def improvement_factor( s, n ):
    """
        Ratio of the baseline worst case s(l - 1) to the unrestricted bound;
        None when the bound is zero.

            >>> from SSP.costmodel import improvement_factor
            >>> improvement_factor( 7, 7 )
            Fraction(14, 15)
            >>> improvement_factor( 1, 1 ) is None
            True
    """
    base = isometry_bound( PipelineParams( n, s, isometry_mode = MALVETTI ) ).value
    ours = isometry_bound( PipelineParams( n, s ) ).value

    if ours == 0:
        return None

    return base / ours

def improvement_table( s_values, n_values ):
    """
        Improvement factor for every pair, with the best factor over all
        n' <= n next to it. Pairs where no batch fits (n <= l) have no factor.

            >>> from SSP.costmodel import improvement_table
            >>> for row in improvement_table( [ 1024 ], [ 11, 12, 40 ] ):
            ...     print( row.n, "%.3f" % row.factor, "%.3f" % row.best )
            11 2.239 2.239
            12 3.251 3.251
            40 4.465 4.465
    """
    ret = []
    top = max( n_values ) if n_values else 0

    for s in s_values:
        l = ceil_log2( s )
        best = None
        running = {}

        for n in range( l + 1, top + 1 ):
            factor = improvement_factor( s, n )
            if factor is not None and ( best is None or factor > best ):
                best = factor
            running[ n ] = best

        for n in n_values:
            if n <= l:
                ret.append( ImprovementRow( s, n, None, None ) )
            else:
                ret.append( ImprovementRow( s, n, improvement_factor( s, n ), running[ n ] ) )

    return ret

################################################################################
#
#    Hamming-weight lemma behind the selection cost
#
#        For 2^(k-1) <= r <= 2^k, S_r = sum( h(x) - 1 ) over the x < r of
#        Hamming weight h(x) > 1 is at most r(k/2 - 1) + 1, with equality at
#        r = 2^k.
#
################################################################################

_POPCOUNT16 = np.array( [ bin( x ).count( "1" ) for x in range( 2 ** 16 ) ], dtype = np.int64 )

def _excess( top ):
    x = np.arange( top, dtype = np.int64 )
    h = _POPCOUNT16[ x & 0xFFFF ] + _POPCOUNT16[ ( x >> 16 ) & 0xFFFF ]

    return np.maximum( h - 1, 0 )

def _check_lemma_bits( k ):
    if not 1 <= k <= LEMMA_MAX_BITS:
        raise invalidParameter( "k=%d outside [1, %d]" % ( k, LEMMA_MAX_BITS ) )

def lemma_brute_force( k, r ):
    """
        Evaluate S_r directly and compare it with the bound.

        :raise invalidParameter: if r is outside [2^(k-1), 2^k] or k is too large

        Usage:

            >>> from SSP.costmodel import lemma_brute_force
            >>> lemma_brute_force( 3, 8 )
            LemmaCheck(S=5, bound=Fraction(5, 1), holds=True)
            >>> lemma_brute_force( 2, 4 ).S, lemma_brute_force( 1, 2 ).S
            (1, 0)
            >>> lemma_brute_force( 3, 3 )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    _check_lemma_bits( k )

    if not 2 ** ( k - 1 ) <= r <= 2 ** k:
        raise invalidParameter( "r=%d outside [%d, %d]" % ( r, 2 ** ( k - 1 ), 2 ** k ) )

    S = int( _excess( r ).sum() )
    bound = r * ( Fraction( k, 2 ) - 1 ) + 1

    return LemmaCheck( S, bound, S <= bound )

def lemma_table( k ):
    """
        S_r and twice the bound, r(k - 2) + 2, for every r in [2^(k-1), 2^k].

            >>> from SSP.costmodel import lemma_table
            >>> table = lemma_table( 3 )
            >>> table.r.tolist(), table.S.tolist(), table.twice_bound.tolist()
            ([4, 5, 6, 7, 8], [1, 1, 2, 3, 5], [6, 7, 8, 9, 10])
            >>> bool( table.holds.all() )
            True
    """
    _check_lemma_bits( k )

    prefix = np.concatenate( [ [ 0 ], np.cumsum( _excess( 2 ** k ) ) ] )
    r = np.arange( 2 ** ( k - 1 ), 2 ** k + 1, dtype = np.int64 )
    S = prefix[ r ]
    twice = r * ( k - 2 ) + 2

    return LemmaTable( r, S, twice, 2 * S <= twice )

__all__ = [
    "Bound", "PipelineParams", "CostReport", "LemmaCheck", "LemmaTable", "ImprovementRow",
    "isometry_bound", "dense_prep_bound", "dense_prep_exact", "sign_fix_placement",
    "estimate", "sweep_r", "optimal_split",
    "improvement_factor", "improvement_table",
    "lemma_brute_force", "lemma_table",
    "qrom_sum",
]
