#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from collections import namedtuple

import numpy as np

from ..circuit import AND, ANDINV, CX, TOF, Circuit, Control, Gate, control, invert, qubit
from ..core.config import BATCH_TRACE_LIMIT, WORD_BITS, MALVETTI, RESTRICTED, RESTRICTED_PHASE, SYNTHESIS_MODES, UNRESTRICTED
from ..core.exceptions import invalidParameter, synthesisError
from ..core.functions import bit_at, is_power_of_two, max_power_of_two
from ..core.logger import debug
from ..costmodel import PipelineParams, estimate, isometry_bound
from ..pui import AddressAction, PuiRequest, apply_pui_effect, build_pui
from ..simverify.functions import compare_with_tableau, verify_rows
from ..tableau import Tableau

BatchRecord = namedtuple( "BatchRecord", [ "start", "stop", "mode", "rows", "toffoli" ] )
SynthesisStats = namedtuple( "SynthesisStats", [ "batches", "build_toffoli", "fix_toffoli", "pui_toffoli" ] )

################################################################################
#
#    Multi-controlled X
#
################################################################################

def mcx_ladder( circuit, controls, target ):
    """
        Append an X on `target` controlled on all the signed `controls`. One
        control gives a CX, two a Toffoli; with k > 2 controls, a ladder of
        k - 2 AND gates computes the conjunction of the first k - 1 controls,
        a Toffoli hits the target and the ladder is uncomputed: k - 1
        Toffolis and k - 2 ancillas.

        :param circuit: Circuit to append to.
        :type circuit: Circuit

        :param controls: Signed controls.
        :type controls: list of Control

        :param target: Target qubit.
        :type target: Qubit

        :return: The circuit.
        :rtype: Circuit

        :raise invalidParameter: without control

        Usage:

            >>> from SSP.circuit import Circuit
            >>> from SSP.isometry import mcx_ladder
            >>> c = mcx_ladder( Circuit( 5 ), [ "+q0", "-q1", "+q2", "+q3" ], 4 )
            >>> print( c.dump() )
            # n=5 extra=0
            # toffoli=3 peak_ancillas=2
            AND +q0 -q1 > a0
            AND +a0 +q2 > a1
            TOF +a1 +q3 > q4
            ANDINV +a0 +q2 > a1
            ANDINV +q0 -q1 > a0
            >>> print( mcx_ladder( Circuit( 2 ), [ "-q0" ], 1 ).dump() )
            # n=2 extra=0
            # toffoli=0 peak_ancillas=0
            CX -q0 > q1
            >>> mcx_ladder( Circuit( 2 ), [], 1 )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    controls = [ control( c ) for c in controls ]

    if len( controls ) == 0:
        raise invalidParameter( "multi-controlled X without control" )

    elif len( controls ) == 1:
        return circuit.append( CX( controls[ 0 ], [ target ] ) )

    elif len( controls ) == 2:
        return circuit.append( TOF( controls[ 0 ], controls[ 1 ], target ) )

    ladder = []
    ctrl = controls[ 0 ]
    for c in controls[ 1:-1 ]:
        anc = circuit.fresh_ancilla()
        circuit.append( AND( ctrl, c, anc ) )
        ladder.append( ( ctrl, c, anc ) )
        ctrl = Control( anc, True )

    circuit.append( TOF( ctrl, controls[ -1 ], target ) )

    for c1, c2, anc in reversed( ladder ):
        circuit.append( ANDINV( c1, c2, anc ) )

    return circuit

################################################################################
#
#    Synthesis result
#
################################################################################

class SynthesisResult( object ):
    """
        Forward circuit G mapping every |C_i> (extra qubit set to 1 for the
        sign-fixing synthesis) to a_i|f(i)>|0>, its inverse (the isometry),
        the bijection f, the closed-form cost estimate and an audit trail of
        the batches.

        :cvar str mode: Synthesis used.
        :cvar Tableau initial: Input support.
        :cvar Tableau final: Tracked tableau after G.
        :cvar Circuit g_forward: The circuit G.
        :cvar Circuit g_isometry: Its inverse.
        :cvar list f: Subspace value of every row.
        :cvar list signs: Sign a_i of every row (all +1 outside the sign-fixing synthesis).
        :cvar CostReport cost: Closed-form estimate of the pipeline.
        :cvar list batch_trace: BatchRecord of every zeroed batch.
        :cvar SynthesisStats stats: Batch count and Toffoli breakdown.

        Usage:

            >>> from SSP.isometry import synthesize
            >>> [ synthesize( fig3, mode ).cross_check() for mode in ( "unrestricted", "restricted_phase", "malvetti" ) ]
            [True, True, True]
    """
    def __init__( self, mode, initial, final, g_forward, f, signs, batch_trace, stats, batch = None ):
        self.mode = mode
        self.initial = initial
        self.final = final
        self.g_forward = g_forward
        self.g_isometry = invert( g_forward )
        self.f = [ int( v ) for v in f ]
        self.signs = list( signs )
        self.batch_trace = batch_trace
        self.stats = stats
        self.cost = estimate( PipelineParams( initial.n, initial.s, isometry_mode = mode, batch = batch ) )

    @property
    def s( self ):
        return self.initial.s

    @property
    def n( self ):
        return self.initial.n

    @property
    def toffoli( self ):
        return self.g_forward.cost.toffoli

    @property
    def ancilla_peak( self ):
        return self.g_forward.cost.peak_ancillas

    @property
    def bound( self ):
        """
            Closed-form worst case of the synthesis used.
        """
        return self.cost.isometry_toffoli_bound

    @property
    def bound_eq1( self ):
        """
            Closed-form worst case of the unrestricted synthesis, for comparison.
        """
        return isometry_bound( PipelineParams( self.n, self.s ) ).value

    def verify( self, isometry = False, **kwargs ):
        """
            Check the circuit (or its inverse) row by row with the simulation
            oracle; see :func:`SSP.simverify.functions.verify_rows`.
        """
        c = self.g_isometry if isometry else self.g_forward
        return verify_rows( c, self.initial, self.f, self.signs, isometry = isometry, **kwargs )

    def cross_check( self ):
        """
            Check the tracked final tableau against the simulation of the
            circuit on the initial rows.
        """
        return compare_with_tableau( self.g_forward, self.initial, self.final )

    def __repr__( self ):
        return "SynthesisResult( %s, s=%d, n=%d, toffoli=%d )" % ( self.mode, self.s, self.n, self.toffoli )

################################################################################
#
#    Synthesis driver
#
#        The driver keeps the circuit and a private tableau in step: every
#        gate appended to the circuit is applied to the tableau, and every
#        partial unary iteration is applied through its semantic effect.
#
################################################################################

class _Synthesis( object ):
    def __init__( self, t, mode, signs = None, m = None ):
        self.mode = mode
        self.t = t
        self.n = t.n
        self.l = t.l
        self.m = max_power_of_two( t.n - t.l ) if m is None else m
        self.requested_m = m
        self.signs = signs
        self.c = Circuit( t.n, t.has_extra )

        self.k = 0
        self.batch = []
        self.batch_mask = t.rows_mask( [] )

        self.trace = []
        self.batches = 0
        self.build_toffoli = 0
        self.fix_toffoli = 0
        self.pui_toffoli = 0

    ############################################################################
    #
    #    Gates applied to both the circuit and the tableau
    #
    ############################################################################

    def emit( self, kind, controls = (), targets = () ):
        t = self.t
        gate = Gate.of( kind, tuple( controls ), tuple( qubit( q ) for q in targets ) )
        targets = [ q.index for q in gate.targets ]
        literals = [ ( c.qubit.index, c.positive ) for c in gate.controls ]

        if kind == "X":
            t.flip( t.match( [] ), targets, inplace = True )

        elif kind == "MultiTargetCX":
            t.cx( literals[ 0 ][ 0 ], targets, inplace = True )

        elif kind == "Toffoli":
            t.toffoli( literals, targets[ 0 ], inplace = True )

        elif kind == "Swap":
            t.swap( targets[ 0 ], targets[ 1 ], inplace = True )

        elif kind == "ControlledPhaseFlip":
            t.negate( t.match( literals ), inplace = True )

        else:
            raise synthesisError( "%s gates are not tracked on the tableau" % kind )

        self.c.append( gate, check = False )

    def mcx( self, literals, target ):
        before = self.c.cost.toffoli

        mcx_ladder( self.c, [ Control( qubit( q ), p ) for q, p in literals ], target )
        self.t.toffoli( literals, target, inplace = True )

        return self.c.cost.toffoli - before

    ############################################################################
    #
    #    Batch building
    #
    ############################################################################

    @property
    def column( self ):
        return self.l + len( self.batch )

    def candidate( self ):
        """
            Row with a 1 in the next batch column (no swap needed), else the
            first row with a 1 further right together with that column.
        """
        t, col = self.t, self.column

        j = Tableau.first( t.column( col ) & ~self.batch_mask )
        if j is not None:
            return j, col

        j = Tableau.first( t.any_mask( col + 1, self.n ) )
        if j is None:
            return None

        bits = t.row_bits( j )[ col + 1:self.n ]
        return j, col + 1 + int( np.flatnonzero( bits )[ 0 ] )

    def swap_into( self, j, r0 ):
        if r0 != self.column:
            self.emit( "Swap", targets = [ r0, self.column ] )

        return j

    def toffoli_into( self, j ):
        """
            Set the next batch column of row `j`, whose non-subspace ones all
            sit in columns of the batch, with one Toffoli: positive control on
            such a column u, and a control on a column v where row j differs
            from the batch row holding e_u.
        """
        t, l, col = self.t, self.l, self.column
        bits = t.row_bits( j )

        ones = np.flatnonzero( bits[ l:col ] )
        if ones.size == 0:
            raise synthesisError( "row %d has no one among the batch columns" % j )

        u = l + int( ones[ 0 ] )
        other = t.row_bits( self.batch[ u - l ] )

        diff = np.flatnonzero( bits != other )
        if diff.size == 0:
            raise synthesisError( "rows %d and %d coincide" % ( j, self.batch[ u - l ] ) )

        v = int( diff[ 0 ] )
        self.emit( "Toffoli", [ Control( qubit( u ), True ), Control( qubit( v ), bool( bits[ v ] ) ) ], [ col ] )
        self.build_toffoli += 1

        return j

    def escape_into( self ):
        """
            No row outside the batch has a one in the non-subspace register:
            pick the first such row still carrying the extra qubit, and copy
            the extra qubit into the next batch column. Batch rows carrying
            the extra qubit are protected by a CX from their own batch column.
        """
        t, n, l, col = self.t, self.n, self.l, self.column

        j = Tableau.first( t.column( n ) & ~self.batch_mask )
        if j is None:
            raise synthesisError( "no row left to insert into the batch" )

        for q, i in enumerate( self.batch ):
            if t.row_bits( i )[ n ]:
                self.emit( "MultiTargetCX", [ Control( qubit( l + q ), True ) ], [ col ] )

        self.emit( "MultiTargetCX", [ Control( qubit( n ), True ) ], [ col ] )

        return j

    def enter_batch( self, j ):
        """
            Bring row `j`, which has a one in the next batch column, to
            |k>|e_b> with one multi-target CX.
        """
        t, l, n, col = self.t, self.l, self.n, self.column
        bits = t.row_bits( j )[ :n ]

        if not bits[ col ]:
            raise synthesisError( "row %d has no one in column %d" % ( j, col ) )

        goal = np.zeros( n, dtype = np.uint8 )
        goal[ :l ] = [ bit_at( self.k, p, l ) for p in range( l ) ]
        goal[ col ] = 1

        targets = np.flatnonzero( bits != goal ).tolist()
        if targets:
            self.emit( "MultiTargetCX", [ Control( qubit( col ), True ) ], targets )

        debug.debug( "row %d enters the batch as |%d>|e_%d>" % ( j, self.k, len( self.batch ) ), 3 )

        self.batch.append( j )
        self.batch_mask[ j // WORD_BITS ] |= np.uint64( 1 << ( j % WORD_BITS ) )
        self.k += 1

    ############################################################################
    #
    #    Batch zeroing
    #
    ############################################################################

    def zero_batch( self, pui_mode ):
        """
            Zero the non-subspace register of the batch rows with one partial
            unary iteration over their addresses [k - b, k - 1], and apply its
            effect (leakage included) to the tableau.
        """
        t, l, n = self.t, self.l, self.n
        b = len( self.batch )

        if b == 0:
            return

        start = self.k - b
        actions = {}
        for q, j in enumerate( self.batch ):
            if self.signs is not None:
                actions[ start + q ] = AddressAction(
                    [ l + q ],
                    phase_flip = t.sign( j ) != self.signs[ j ],
                    clear_extra = bool( t.row_bits( j )[ n ] )
                )

            else:
                actions[ start + q ] = AddressAction( [ l + q ] )

        req = PuiRequest( l, start, self.k - 1, actions, pui_mode, n = n, extra = t.has_extra )

        before = self.c.cost.toffoli
        _, leakage = build_pui( req, self.c )
        apply_pui_effect( t, req, leakage, inplace = True )
        toffoli = self.c.cost.toffoli - before

        self.pui_toffoli += toffoli
        self.batches += 1
        if len( self.trace ) < BATCH_TRACE_LIMIT:
            self.trace.append( BatchRecord( start, self.k - 1, pui_mode, tuple( self.batch ), toffoli ) )

        debug.debug( "batch [%d, %d] zeroed, %s: %d Toffoli, |L|=%d" % ( start, self.k - 1, pui_mode, toffoli, leakage.size ), 2 )

        self.batch = []
        self.batch_mask = t.rows_mask( [] )

    ############################################################################
    #
    #    One step of the sequential algorithm
    #
    ############################################################################

    def sequential_step( self, i, value ):
        """
            Map row `i`, whose non-subspace register holds ones, to
            |value>|0>: a multi-target CX controlled on its first non-subspace
            one brings it to |value>|e_c>, then a multi-controlled X on
            |value> clears column c. No row at address `value` may lie in the
            subspace.
        """
        t, l, n = self.t, self.l, self.n
        bits = t.row_bits( i )[ :n ]

        ones = np.flatnonzero( bits[ l: ] )
        if ones.size == 0:
            raise synthesisError( "row %d is already in the subspace" % i )

        c = l + int( ones[ 0 ] )

        goal = np.zeros( n, dtype = np.uint8 )
        goal[ :l ] = [ bit_at( value, p, l ) for p in range( l ) ]
        goal[ c ] = 1

        targets = np.flatnonzero( bits != goal ).tolist()
        if targets:
            self.emit( "MultiTargetCX", [ Control( qubit( c ), True ) ], targets )

        literals = [ ( p, bool( bit_at( value, p, l ) ) ) for p in range( l ) ]
        if literals:
            return self.mcx( literals, c )

        self.emit( "X", targets = [ c ] )
        return 0

    ############################################################################
    #
    #    Degenerate supports
    #
    ############################################################################

    def single_row( self ):
        """
            s = 1: the subspace register is empty, X gates clear the row.
        """
        t, n = self.t, self.n

        ones = np.flatnonzero( t.row_bits( 0 )[ :n ] ).tolist()
        if ones:
            self.emit( "X", targets = ones )

        if self.signs is not None:
            if t.sign( 0 ) != self.signs[ 0 ]:
                self.emit( "ControlledPhaseFlip", [ Control( qubit( n ), True ) ] )
            self.emit( "X", targets = [ n ] )

    def dense_signs( self ):
        """
            n = l: the rows are already dense; clear the extra qubit and fix
            the signs with one restricted iteration over the negative rows.
        """
        t, l, n = self.t, self.l, self.n

        self.emit( "X", targets = [ n ] )

        addresses = t.addresses()
        negative = [ i for i in range( t.s ) if t.sign( i ) != self.signs[ i ] ]
        if not negative:
            return

        actions = dict( ( int( addresses[ i ] ), AddressAction( phase_flip = True ) ) for i in negative )
        req = PuiRequest( l, min( actions ), max( actions ), actions, RESTRICTED, n = n, extra = True )

        before = self.c.cost.toffoli
        _, leakage = build_pui( req, self.c )
        apply_pui_effect( t, req, leakage, inplace = True )

        self.pui_toffoli += self.c.cost.toffoli - before
        self.batches += 1
        self.trace.append( BatchRecord( req.l, req.r, RESTRICTED, tuple( negative ), self.c.cost.toffoli - before ) )

    ############################################################################
    #
    #    Algorithms
    #
    ############################################################################

    def run_unrestricted( self ):
        t, l, n = self.t, self.l, self.n

        # rows outside the batch with a one outside the subspace; building a
        # batch never changes this set, only entries and zeroing do
        active = None

        while True:
            if len( self.batch ) == self.m:
                self.zero_batch( UNRESTRICTED )
                active = None

            if active is None:
                active = t.any_mask( l, n ) & ~self.batch_mask

            if not active.any():
                break

            found = self.candidate()
            if found is not None:
                j = self.swap_into( *found )

            else:
                j = self.toffoli_into( Tableau.first( active ) )

            self.enter_batch( j )
            active[ j // WORD_BITS ] &= ~np.uint64( 1 << ( j % WORD_BITS ) )

        self.finish_unrestricted()

    def finish_unrestricted( self ):
        """
            Zero the last batch. Rows outside the batch that never entered
            one (stragglers) may sit at addresses above the batch: the
            leakage of an unrestricted iteration could push them out of the
            subspace, so a restricted one is used instead. A straggler at a
            batch address picks up that batch column; one sequential step
            maps it to an unused subspace value.
        """
        t = self.t
        b = len( self.batch )
        if b == 0:
            return

        start = self.k - b
        addresses = t.addresses()
        members = set( self.batch )
        stragglers = [ i for i in np.flatnonzero( addresses >= start ).tolist() if i not in members ]

        if not stragglers:
            self.zero_batch( UNRESTRICTED )
            return

        self.zero_batch( RESTRICTED )

        displaced = [ i for i in stragglers if addresses[ i ] < self.k ]
        if not displaced:
            return

        used = set( addresses.tolist() )
        value = 0
        for i in displaced:
            while value in used:
                value += 1
            used.add( value )

            debug.debug( "row %d displaced at address %d, moved to %d" % ( i, addresses[ i ], value ), 2 )
            self.fix_toffoli += self.sequential_step( i, value )

    def run_restricted_phase( self ):
        t, l, n, s = self.t, self.l, self.n, self.t.s

        while True:
            if len( self.batch ) == self.m or self.k == s:
                self.zero_batch( RESTRICTED )
                if self.k == s:
                    break

            found = self.candidate()
            if found is not None:
                j = self.swap_into( *found )

            else:
                j = Tableau.first( t.any_mask( l, n ) & ~self.batch_mask )
                if j is not None:
                    j = self.toffoli_into( j )
                else:
                    j = self.escape_into()

            self.enter_batch( j )

    def run_malvetti( self ):
        t, l, n = self.t, self.l, self.n

        addresses = t.addresses()
        inside = ~t.any_mask( l, n )
        used = set( addresses[ t.mask_rows( inside ) ].tolist() )
        value = 0

        for i in range( t.s ):
            if t.is_subspace( i ):
                used.add( t.address( i ) )
                continue

            a = t.address( i )
            if a in used:
                while value in used:
                    value += 1
                a = value

            used.add( a )
            self.fix_toffoli += self.sequential_step( i, a )

    ############################################################################
    #
    #    Result
    #
    ############################################################################

    def result( self, initial ):
        t, l, n = self.t, self.l, self.n

        if t.any_mask( l, n ).any():
            raise synthesisError( "rows left outside the subspace: %s" % t.mask_rows( t.any_mask( l, n ) )[ :8 ] )

        if t.has_extra and t.column( n ).any():
            raise synthesisError( "extra qubit left set on rows %s" % t.mask_rows( t.column( n ) )[ :8 ] )

        f = t.addresses().tolist()
        if len( set( f ) ) != len( f ):
            raise synthesisError( "f is not injective" )

        signs = list( self.signs ) if self.signs is not None else [ 1 ] * t.s
        if t.signs != signs:
            raise synthesisError( "signs not fixed on rows %s" % [ i for i, ( a, b ) in enumerate( zip( t.signs, signs ) ) if a != b ][ :8 ] )

        stats = SynthesisStats( self.batches, self.build_toffoli, self.fix_toffoli, self.pui_toffoli )

        debug.info( "%s synthesis, s=%d, n=%d: %d Toffoli, %d batches, %d ancillas" % (
            self.mode, t.s, n, self.c.cost.toffoli, self.batches, self.c.cost.peak_ancillas
        ) )

        return SynthesisResult( self.mode, initial, t, self.c, f, signs, self.trace, stats, self.requested_m )

################################################################################
#
#    Public interface
#
################################################################################

def _check_input( t ):
    if not isinstance( t, Tableau ):
        raise invalidParameter( "a Tableau is expected, got %s" % type( t ).__name__ )

    if t.n < t.l:
        raise invalidParameter( "%d rows do not fit on %d qubits" % ( t.s, t.n ) )

def _plain( t ):
    _check_input( t )

    if t.has_extra:
        raise invalidParameter( "the support carries an extra column" )

    return t.with_signs()

def synthesize_unrestricted( t, m = None ):
    """
        Batched synthesis with unrestricted partial unary iterations.

        Batches of m = 2^p <= n - l rows are built as |k>|e_0>, |k+1>|e_1>,
        ... with, for each new row, a swap of non-subspace columns or one
        Toffoli when needed, then a multi-target CX. A full batch is zeroed
        by one unrestricted iteration over its addresses; its leakage is
        tracked on the tableau and the rows it reaches are simply batched
        again later. Ties go to the smallest row and column index.

        :param t: Support to map into the subspace.
        :type t: Tableau

        :param m: Batch size, a power of two not above n - l (the largest one when None).
        :type m: int

        :return: Circuit, bijection and cost.
        :rtype: SynthesisResult

        :raise invalidParameter: if the support carries an extra column, or on a bad batch size

        Usage:

            >>> from SSP.isometry import synthesize_unrestricted
            >>> res = synthesize_unrestricted( fig3 )
            >>> res
            SynthesisResult( unrestricted, s=7, n=7, toffoli=5 )
            >>> res.f
            [0, 1, 3, 4, 5, 2, 6]
            >>> res.bound, res.stats
            (Fraction(15, 1), SynthesisStats(batches=2, build_toffoli=1, fix_toffoli=0, pui_toffoli=4))
            >>> [ ( rec.start, rec.stop, rec.mode ) for rec in res.batch_trace ]
            [(0, 3, 'unrestricted'), (4, 6, 'unrestricted')]
            >>> res.verify().rows
            7
            >>> res.verify( isometry = True ).rows
            7

            >>> from SSP.tableau import Tableau
            >>> res = synthesize_unrestricted( Tableau( [ "10110" ] ) )
            >>> print( res.g_forward.dump() )
            # n=5 extra=0
            # toffoli=0 peak_ancillas=0
            X > q0,q2,q3

        A smaller batch size trades fewer free columns for more batches:

            >>> res = synthesize_unrestricted( fig3, m = 2 )
            >>> res.cost.params.m, res.verify().rows
            (2, 7)
            >>> synthesize_unrestricted( fig3, m = 8 )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    work = _plain( t )

    if m is not None and not ( is_power_of_two( m ) and m <= work.n - work.l ):
        raise invalidParameter( "batch of %s rows with %d free qubits" % ( m, work.n - work.l ) )

    run = _Synthesis( work, UNRESTRICTED, m = m )

    if work.s == 1:
        run.single_row()

    elif work.n > work.l:
        run.run_unrestricted()

    return run.result( t.with_signs() )

def synthesize_best_batch( t ):
    """
        Run the batched synthesis with unrestricted iterations for every
        batch size m = 1, 2, 4, ... not above n - l and keep the circuit with
        the fewest Toffolis (the largest m on a tie).

        Appending zero columns to the support leaves the circuit of each
        batch size unchanged and only adds larger sizes to try, so the count
        returned never grows with the padded width.

            >>> from SSP.isometry import synthesize_best_batch, synthesize_unrestricted
            >>> from SSP.tableau.functions import random_support
            >>> t = random_support( 64, 8, 3 )
            >>> counts = [ synthesize_best_batch( t.pad( k ) ).toffoli for k in ( 0, 2, 6, 14, 30 ) ]
            >>> all( a >= b for a, b in zip( counts, counts[ 1: ] ) )
            True
            >>> synthesize_unrestricted( t, m = 2 ).toffoli == synthesize_unrestricted( t.pad( 8 ), m = 2 ).toffoli
            True
            >>> synthesize_best_batch( fig3 ).verify().rows
            7
    """
    work = _plain( t )

    sizes = []
    m = 1
    while m <= work.n - work.l:
        sizes.append( m )
        m *= 2

    if not sizes:
        return synthesize_unrestricted( t )

    best = None
    for m in sizes:
        res = synthesize_unrestricted( t, m = m )
        debug.debug( "batch size %d: %d Toffoli" % ( m, res.toffoli ), 2 )

        if best is None or res.toffoli <= best.toffoli:
            best = res

    return best

def synthesize_restricted_phase( t, signs = None ):
    """
        Batched synthesis with restricted partial unary iterations, fixing
        the signs on the way. An extra qubit, set to 1 on every row, is
        cleared by the iteration leaf that zeroes the row, which also flips
        the sign where needed. When no row outside the batch has a one left
        in the non-subspace register, the extra qubit itself is copied into
        the next batch column.

        :param t: Support to map into the subspace.
        :type t: Tableau

        :param signs: Sign a_i of every row; the tableau signs when None.
        :type signs: list of int

        :return: Circuit on n + 1 qubits mapping |C_i>|1> to a_i|f(i)>|0>|0>.
        :rtype: SynthesisResult

        :raise invalidParameter: on malformed signs, or an extra column not set to 1

        Usage:

            >>> from SSP.isometry import synthesize_restricted_phase
            >>> res = synthesize_restricted_phase( fig3 )
            >>> res.toffoli <= res.bound == 12
            True
            >>> res.verify().rows
            7
            >>> res = synthesize_restricted_phase( fig3, [ -1, 1, 1, -1, 1, 1, -1 ] )
            >>> res.verify().signs.tolist()
            [-1, 1, 1, -1, 1, 1, -1]
    """
    _check_input( t )

    if signs is None:
        signs = t.signs

    signs = [ int( a ) for a in signs ]
    if len( signs ) != t.s or any( a not in ( 1, -1 ) for a in signs ):
        raise invalidParameter( "expected %d signs in {+1, -1}" % t.s )

    if t.has_extra:
        if not ( t.column( t.n ) == t.match( [] ) ).all():
            raise invalidParameter( "the extra column must be set to 1 on every row" )
        initial = Tableau.from_matrix( t.matrix()[ :, :t.n ] )

    else:
        initial = t.with_signs()

    work = initial.with_extra()
    run = _Synthesis( work, RESTRICTED_PHASE, signs )

    if work.s == 1:
        run.single_row()

    elif work.n == work.l:
        run.dense_signs()

    else:
        run.run_restricted_phase()

    return run.result( initial )

def synthesize_malvetti( t ):
    """
        Sequential baseline: every row outside the subspace is brought to
        |k>|e_c> with one multi-target CX, k being its own address when no
        subspace row uses it and the smallest unused value otherwise, then
        cleared with an l-controlled X.

            >>> from SSP.isometry import synthesize_malvetti
            >>> res = synthesize_malvetti( fig2 )
            >>> res.f, res.toffoli, res.ancilla_peak
            ([3, 7, 4, 0, 6, 1, 2], 14, 1)
            >>> res.verify().rows
            7
    """
    work = _plain( t )
    run = _Synthesis( work, MALVETTI )

    if work.n > work.l:
        run.run_malvetti()

    return run.result( t.with_signs() )

def synthesize( t, mode = UNRESTRICTED, signs = None ):
    """
        Dispatch to one of the synthesis algorithms; `signs` is only used by
        the sign-fixing one.

            >>> from SSP.isometry import synthesize
            >>> synthesize( fig3, "malvetti" )
            SynthesisResult( malvetti, s=7, n=7, toffoli=14 )
            >>> synthesize( fig3, "fomichev" )
            Traceback (most recent call last):
                ...
            invalidParameter
    """
    mode = mode.replace( "-", "_" )

    if mode not in SYNTHESIS_MODES:
        raise invalidParameter( "unknown synthesis mode '%s'" % mode )

    debug.debug( "%s synthesis of %r" % ( mode, t ), 1 )

    if mode == UNRESTRICTED:
        return synthesize_unrestricted( t )

    elif mode == RESTRICTED_PHASE:
        return synthesize_restricted_phase( t, signs )

    else:
        return synthesize_malvetti( t )
