#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from numbers import Integral

from ..circuit import Circuit, Control, Gate, control, qubit
from ..core.config import LEAKAGE_MATERIALIZE_LIMIT, PUI_MODES, UNRESTRICTED
from ..core.exceptions import invalidInterval, invalidParameter, malformedRequest
from ..core.functions import bit_at
from ..core.logger import debug

################################################################################
#
#    Requests
#
################################################################################

class AddressAction( object ):
    """
        What a partial unary iteration does for one address value: flip the
        `x_targets`, flip the extra qubit (`clear_extra`) and multiply by -1
        (`phase_flip`).

            >>> from SSP.pui import AddressAction
            >>> AddressAction( [ 5, 3 ] )
            AddressAction( x_targets=[3, 5], phase_flip=False, clear_extra=False )
            >>> AddressAction().empty
            True
    """
    __slots__ = ( "x_targets", "phase_flip", "clear_extra" )

    def __init__( self, x_targets = (), phase_flip = False, clear_extra = False ):
        self.x_targets = frozenset( qubit( t ) for t in x_targets )
        self.phase_flip = bool( phase_flip )
        self.clear_extra = bool( clear_extra )

    @property
    def empty( self ):
        return not ( self.x_targets or self.phase_flip or self.clear_extra )

    def targets( self ):
        return sorted( self.x_targets )

    def __eq__( self, other ):
        return isinstance( other, AddressAction ) and ( self.x_targets, self.phase_flip, self.clear_extra ) == ( other.x_targets, other.phase_flip, other.clear_extra )

    def __ne__( self, other ):
        return not self == other

    def __repr__( self ):
        return "AddressAction( x_targets=%s, phase_flip=%s, clear_extra=%s )" % (
            [ t.index for t in self.targets() ],
            self.phase_flip,
            self.clear_extra
        )

NO_ACTION = AddressAction()

class PuiRequest( object ):
    """
        Partial unary iteration over the address interval [l, r] of a `w`
        qubit address register.

        :cvar int w: Address width.
        :cvar int l: First address of the interval.
        :cvar int r: Last address of the interval.
        :cvar dict actions: Address value to AddressAction; missing values act trivially.
        :cvar str mode: 'restricted' or 'unrestricted'.
        :cvar Control outer_control: Optional control of the whole iteration.
        :cvar list address_qubits: Address qubits, most significant first (q0..q<w-1> by default).
        :cvar int n: Width of the main register of the circuit.
        :cvar bool extra: The circuit carries the extra qubit q<n>.

        Usage:

            >>> from SSP.pui import PuiRequest, AddressAction
            >>> PuiRequest( 3, 4, 6, { 4: AddressAction( [ 3 ] ) } )
            PuiRequest( w=3, [4, 6], unrestricted, 1 actions )
            >>> PuiRequest( 3, 4, 8 )
            Traceback (most recent call last):
                ...
            invalidInterval
            >>> PuiRequest( 3, 4, 6, { 2: AddressAction( [ 3 ] ) } )
            Traceback (most recent call last):
                ...
            invalidInterval
            >>> PuiRequest( 3, 4, 6, { 4: AddressAction( [ 1 ] ) } )
            Traceback (most recent call last):
                ...
            malformedRequest
    """
    def __init__( self, w, l, r, actions = None, mode = UNRESTRICTED, outer_control = None, address_qubits = None, n = None, extra = False ):
        if not isinstance( w, Integral ) or w < 0:
            raise invalidParameter( "address width %s" % ( w, ) )

        if not 0 <= l <= r < 2 ** w:
            raise invalidInterval( "[%s, %s] is not an interval of [0, %d)" % ( l, r, 2 ** w ) )

        if mode not in PUI_MODES:
            raise invalidParameter( "unknown PUI mode '%s'" % mode )

        self.w = w
        self.l = l
        self.r = r
        self.mode = mode
        self.extra = bool( extra )
        self.outer_control = None if outer_control is None else control( outer_control )

        if address_qubits is None:
            address_qubits = range( w )

        self.address_qubits = [ qubit( q ) for q in address_qubits ]
        if len( self.address_qubits ) != w or len( set( self.address_qubits ) ) != w:
            raise malformedRequest( "%d distinct address qubits expected" % w )

        self.actions = {}
        for address, action in ( actions or {} ).items():
            if not l <= address <= r:
                raise invalidInterval( "action for address %d outside [%d, %d]" % ( address, l, r ) )

            if not action.empty:
                self.actions[ address ] = action

        reserved = set( self.address_qubits )
        if self.outer_control is not None:
            reserved.add( self.outer_control.qubit )

        used = set( reserved )
        for address, action in self.actions.items():
            if action.x_targets & reserved:
                raise malformedRequest( "action of address %d flips an address or control qubit" % address )

            if action.clear_extra and not self.extra:
                raise malformedRequest( "clear_extra without an extra qubit" )

            used.update( action.x_targets )

        main = [ q.index for q in used if not q.is_ancilla ]
        self.n = n if n is not None else max( main + [ -1 ] ) + 1

        if any( i >= self.n for i in main ):
            raise malformedRequest( "qubit beyond the main register of %d qubits" % self.n )

    def action( self, address ):
        return self.actions.get( address, NO_ACTION )

    @property
    def extra_qubit( self ):
        return qubit( self.n )

    def __repr__( self ):
        return "PuiRequest( w=%d, [%d, %d], %s, %d actions )" % ( self.w, self.l, self.r, self.mode, len( self.actions ) )

################################################################################
#
#    Leakage
#
################################################################################

class Leakage( object ):
    """
        Addresses above the interval on which an unrestricted iteration also
        acts. Each leaf of the traversal carries the set of address positions
        whose test was skipped ("free" positions, all 0 on the leaf address);
        every address equal to the leaf on the other positions, with at least
        one 1 among the free ones, receives the action g(x) of that leaf.

        L is only materialised up to 2^20 addresses; membership and g are
        always available.

            >>> from SSP.pui import Leakage
            >>> leak = Leakage( 3, { 0: { 0 }, 1: { 0 }, 2: set() } )
            >>> sorted( leak.L ), leak.g( 5 ), 6 in leak, 2 in leak
            ([4, 5], 1, False, False)
    """
    def __init__( self, w, leaves = None ):
        self.w = w
        self.leaves = dict( ( i, frozenset( free ) ) for i, free in ( leaves or {} ).items() if free )

        self._groups = {}
        for i, free in self.leaves.items():
            mask = 0
            for d in free:
                mask |= 1 << ( w - 1 - d )

            self._groups.setdefault( mask, set() ).add( i )

    @property
    def size( self ):
        return sum( 2 ** len( free ) - 1 for free in self.leaves.values() )

    def __len__( self ):
        return self.size

    def g( self, x ):
        """
            Address of the interval whose action fires on `x`, None if `x` is
            not in L.
        """
        for mask, leaves in self._groups.items():
            base = x & ~mask
            if base != x and base in leaves:
                return base

        return None

    def __contains__( self, x ):
        return self.g( x ) is not None

    def items( self ):
        """
            ( x, g(x) ) for every address of L, in increasing order of x.
        """
        if self.size > LEAKAGE_MATERIALIZE_LIMIT:
            raise invalidParameter( "|L| = %d is too large to enumerate" % self.size )

        ret = []
        for i, free in self.leaves.items():
            positions = [ 1 << ( self.w - 1 - d ) for d in sorted( free ) ]
            for k in range( 1, 2 ** len( positions ) ):
                x = i
                for j, p in enumerate( positions ):
                    if k >> j & 1:
                        x |= p
                ret.append( ( x, i ) )

        return sorted( ret )

    def addresses( self ):
        return [ x for x, _ in self.items() ]

    @property
    def L( self ):
        return set( self.addresses() )

    def __repr__( self ):
        return "Leakage( w=%d, |L|=%d )" % ( self.w, self.size )

################################################################################
#
#    Circuit construction
#
################################################################################

def build_pui( req, circuit = None ):
    """
        Build the partial unary iteration circuit of a request by traversing
        the balanced binary tree of the address space.

        A node splitting on address position d with both halves intersecting
        [l, r] costs one AND (none at an uncontrolled root, where the address
        qubit is X-conjugated instead). A node whose right half misses the
        interval is skipped in unrestricted mode, position d becoming free,
        and costs one AND in restricted mode. A node whose left half misses
        the interval uses the address qubit directly (uncontrolled) or one
        AND.

        At each leaf the action is emitted controlled on the live node qubit:
        X-targets as one multi-target CX, then the extra qubit, then the
        phase flip.

        :param req: The request.
        :type req: PuiRequest

        :param circuit: Circuit to append to (its ancilla pool is used); a new one when None.
        :type circuit: Circuit

        :return: The circuit and the leakage (empty in restricted mode).
        :rtype: tuple

        Usage:

            >>> from SSP.pui import PuiRequest, AddressAction, build_pui
            >>> req = PuiRequest( 3, 0, 3, dict( ( i, AddressAction( [ 3 + i ] ) ) for i in range( 4 ) ) )
            >>> c, leak = build_pui( req )
            >>> print( c.dump() )
            # n=7 extra=0
            # toffoli=2 peak_ancillas=1
            X > q1
            AND +q1 -q2 > a0
            CX +a0 > q3
            CX +q1 > a0
            CX +a0 > q4
            ANDINV +q1 +q2 > a0
            X > q1
            AND +q1 -q2 > a0
            CX +a0 > q5
            CX +q1 > a0
            CX +a0 > q6
            ANDINV +q1 +q2 > a0
            >>> leak.items()
            [(4, 0), (5, 1), (6, 2), (7, 3)]
    """
    if circuit is None:
        circuit = Circuit( req.n, req.extra )

    free_of = {}
    before = circuit.cost.toffoli

    def emit( kind, controls, targets ):
        circuit.append( Gate.of( kind, tuple( controls ), tuple( targets ) ), check = False )

    def address( d ):
        return req.address_qubits[ d ]

    def hits( lo, hi ):
        return lo <= req.r and req.l <= hi

    def leaf( i, ctrl, free ):
        free_of[ i ] = free
        action = req.action( i )
        controls = [ ctrl ] if ctrl else []
        flip = "MultiTargetCX" if ctrl else "X"

        if action.x_targets:
            emit( flip, controls, action.targets() )

        if action.clear_extra:
            emit( flip, controls, [ req.extra_qubit ] )

        if action.phase_flip:
            emit( "ControlledPhaseFlip", controls, () )

    def visit( lo, hi, d, ctrl, free ):
        if lo == hi:
            leaf( lo, ctrl, free )
            return

        mid = lo + ( hi - lo + 1 ) // 2 - 1
        left, right = hits( lo, mid ), hits( mid + 1, hi )
        q = address( d )

        if left and right:
            if ctrl is None:
                emit( "X", (), [ q ] )
                visit( lo, mid, d + 1, Control( q, True ), free )
                emit( "X", (), [ q ] )
                visit( mid + 1, hi, d + 1, Control( q, True ), free )

            else:
                anc = circuit.fresh_ancilla()
                emit( "And", [ ctrl, Control( q, False ) ], [ anc ] )
                visit( lo, mid, d + 1, Control( anc, True ), free )
                emit( "MultiTargetCX", [ ctrl ], [ anc ] )
                visit( mid + 1, hi, d + 1, Control( anc, True ), free )
                emit( "AndInverse", [ ctrl, Control( q, True ) ], [ anc ] )

        elif left:
            if req.mode == UNRESTRICTED:
                visit( lo, mid, d + 1, ctrl, free | frozenset( [ d ] ) )

            elif ctrl is None:
                emit( "X", (), [ q ] )
                visit( lo, mid, d + 1, Control( q, True ), free )
                emit( "X", (), [ q ] )

            else:
                anc = circuit.fresh_ancilla()
                emit( "And", [ ctrl, Control( q, False ) ], [ anc ] )
                visit( lo, mid, d + 1, Control( anc, True ), free )
                emit( "AndInverse", [ ctrl, Control( q, False ) ], [ anc ] )

        elif right:
            if ctrl is None:
                visit( mid + 1, hi, d + 1, Control( q, True ), free )

            else:
                anc = circuit.fresh_ancilla()
                emit( "And", [ ctrl, Control( q, True ) ], [ anc ] )
                visit( mid + 1, hi, d + 1, Control( anc, True ), free )
                emit( "AndInverse", [ ctrl, Control( q, True ) ], [ anc ] )

    visit( 0, 2 ** req.w - 1, 0, req.outer_control, frozenset() )

    leakage = Leakage( req.w, free_of if req.mode == UNRESTRICTED else None )

    debug.debug( "PUI [%d, %d] on %d address qubits, %s: %d Toffoli, |L|=%d" % (
        req.l, req.r, req.w, req.mode, circuit.cost.toffoli - before, leakage.size
    ), 2 )

    return circuit, leakage

################################################################################
#
#    Semantic effect
#
################################################################################

def pui_action_effect( req, leakage = None ):
    """
        Effect of a partial unary iteration as a list of ( literals, action )
        pairs: the action fires on every basis state matching all the signed
        ( qubit index, polarity ) literals. Free positions of a leaf are left
        out of its literals, which accounts for the leakage. Leaves without
        action are omitted.

            >>> from SSP.pui import PuiRequest, AddressAction, build_pui, pui_action_effect
            >>> req = PuiRequest( 3, 4, 6, { 6: AddressAction( [ 3 ] ) } )
            >>> _, leak = build_pui( req )
            >>> pui_action_effect( req, leak )
            [([(0, True), (1, True)], AddressAction( x_targets=[3], phase_flip=False, clear_extra=False ))]
            >>> pui_action_effect( PuiRequest( 3, 4, 6, { 6: AddressAction( [ 3 ] ) }, mode = "restricted" ) )
            [([(0, True), (1, True), (2, False)], AddressAction( x_targets=[3], phase_flip=False, clear_extra=False ))]
    """
    leaves = leakage.leaves if leakage is not None and req.mode == UNRESTRICTED else {}

    prefix = []
    if req.outer_control is not None:
        prefix.append( ( req.outer_control.qubit.index, req.outer_control.positive ) )

    ret = []
    for i in sorted( req.actions ):
        free = leaves.get( i, frozenset() )
        literals = prefix + [
            ( req.address_qubits[ d ].index, bool( bit_at( i, d, req.w ) ) )
            for d in range( req.w ) if d not in free
        ]
        ret.append( ( literals, req.actions[ i ] ) )

    return ret

def apply_pui_effect( t, req, leakage = None, inplace = False ):
    """
        Apply the effect of a partial unary iteration to a tableau.
    """
    t = t if inplace else t.copy()

    effect = pui_action_effect( req, leakage )
    if not effect:
        return t

    shared = set( effect[ 0 ][ 0 ] )
    for literals, _ in effect[ 1: ]:
        shared &= set( literals )

    base = t.match( sorted( shared ) )

    for literals, action in effect:
        mask = t.match( [ lit for lit in literals if lit not in shared ], within = base )

        columns = [ q.index for q in action.x_targets ]
        if action.clear_extra:
            columns.append( req.n )

        if columns:
            t.flip( mask, columns, inplace = True )

        if action.phase_flip:
            t.negate( mask, inplace = True )

    return t

