#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from collections import Counter, namedtuple
from numbers import Integral

from ..core.exceptions import freedAncilla, indexOutOfRange, malformedGate
from ..core.logger import debug
from .labels import INVERSE, LABEL, toffoli_cost

################################################################################
#
#    Qubits and signed controls
#
#        The main register (and the extra qubit, id n) lives in register 'q';
#        ancillas live in a separate namespace 'a'.
#
################################################################################

class Qubit( namedtuple( "Qubit", [ "register", "index" ] ) ):
    __slots__ = ()

    def __str__( self ):
        return "%s%d" % ( self.register, self.index )

    @property
    def is_ancilla( self ):
        return self.register == "a"

class Control( namedtuple( "Control", [ "qubit", "positive" ] ) ):
    __slots__ = ()

    def __str__( self ):
        return "%s%s" % ( "+" if self.positive else "-", self.qubit )

    def __invert__( self ):
        return Control( self.qubit, not self.positive )

def qubit( spec ):
    """
        Normalise a qubit given as a Qubit, an int (main register) or a
        string 'q3' / 'a0'.

            >>> from SSP.circuit import qubit
            >>> qubit( 3 ), qubit( "a0" )
            (Qubit(register='q', index=3), Qubit(register='a', index=0))
            >>> qubit( "b2" )
            Traceback (most recent call last):
                ...
            malformedGate
    """
    if isinstance( spec, Qubit ):
        return spec

    elif isinstance( spec, Integral ):
        if spec < 0:
            raise indexOutOfRange( "negative qubit index %d" % spec )
        return Qubit( "q", int( spec ) )

    elif isinstance( spec, str ) and len( spec ) > 1 and spec[ 0 ] in "qa" and spec[ 1: ].isdigit():
        return Qubit( spec[ 0 ], int( spec[ 1: ] ) )

    else:
        raise malformedGate( "'%s' is not a qubit" % ( spec, ) )

def control( spec, positive = True ):
    """
        Normalise a control given as a Control, a ( qubit, polarity ) pair, a
        string '+q3' / '-a1', or a bare qubit (with the `positive` flag).

            >>> from SSP.circuit import control
            >>> str( control( "-q1" ) ), str( control( ( 2, "+" ) ) ), str( ~control( 4 ) )
            ('-q1', '+q2', '-q4')
    """
    if isinstance( spec, Control ):
        return spec

    elif isinstance( spec, tuple ) and len( spec ) == 2 and not isinstance( spec, Qubit ):
        q, p = spec
        return Control( qubit( q ), p in ( True, 1, "+" ) )

    elif isinstance( spec, str ) and spec[ :1 ] in ( "+", "-" ):
        return Control( qubit( spec[ 1: ] ), spec[ 0 ] == "+" )

    else:
        return Control( qubit( spec ), bool( positive ) )

################################################################################
#
#    Gates
#
################################################################################

#    ( min controls, max controls, min targets, max targets ), None for no limit
SHAPE = {
    'X':                   ( 0, 0,    1, None ),
    'MultiTargetCX':       ( 1, 1,    1, None ),
    'Toffoli':             ( 2, None, 1, 1 ),
    'Swap':                ( 0, 0,    2, 2 ),
    'And':                 ( 2, 2,    1, 1 ),
    'AndInverse':          ( 2, 2,    1, 1 ),
    'ControlledPhaseFlip': ( 0, None, 0, 0 )
}

def _within( value, lo, hi ):
    return lo <= value and ( hi is None or value <= hi )

class Gate( object ):
    """
        One reversible primitive. The shape of the controls and targets is
        checked against the kind of gate:

            X                    no control, one or more targets
            MultiTargetCX        one control, one or more targets
            Toffoli              two or more controls, one target
            Swap                 no control, two targets
            And, AndInverse      two controls, one ancilla target
            ControlledPhaseFlip  any number of controls, no target

        Controls and targets are disjoint. And and AndInverse always target
        an ancilla; a multi-target CX may also toggle a live ancilla (the
        sibling step of a partial unary iteration). X, Toffoli and Swap only
        write to the main register.

        A Toffoli with k controls costs k - 1 Toffolis, a phase flip with k > 2
        controls k - 2.

        Usage:

            >>> from SSP.circuit import Gate, TOF, AND, CX, CPF
            >>> g = TOF( "+q2", "+q3", 5 )
            >>> g
            Gate( 'TOF +q2 +q3 > q5' )
            >>> g.toffoli
            1
            >>> Gate( "Toffoli", [ "+q0", "-q1", "+q2" ], [ 4 ] ).toffoli
            2
            >>> CPF( "+q0", "+q1" ).toffoli, CPF( "+q0", "+q1", "-q2" ).toffoli
            (0, 1)
            >>> AND( "+q0", "-q1", "a0" ).inverse()
            Gate( 'ANDINV +q0 -q1 > a0' )
            >>> CX( "+q1", [ "a0" ] )
            Gate( 'CX +q1 > a0' )
            >>> Gate( "Toffoli", [ "+q1" ], [ 2 ] )
            Traceback (most recent call last):
                ...
            malformedGate
            >>> Gate( "MultiTargetCX", [ "+q1" ], [ 1, 2 ] )
            Traceback (most recent call last):
                ...
            malformedGate
            >>> Gate( "X", (), [ "a0" ] )
            Traceback (most recent call last):
                ...
            malformedGate
    """
    __slots__ = ( "kind", "controls", "targets" )

    def __init__( self, kind, controls = (), targets = () ):
        if kind not in LABEL:
            raise malformedGate( "unknown gate kind '%s'" % kind )

        self.kind = kind
        self.controls = tuple( control( c ) for c in controls )
        self.targets = tuple( qubit( t ) for t in targets )

        self._check()

    @classmethod
    def of( cls, kind, controls, targets ):
        """
            Gate from normalised Control and Qubit tuples, without any
            check; used by the circuit builders of the library.
        """
        gate = cls.__new__( cls )
        gate.kind = kind
        gate.controls = controls
        gate.targets = targets
        return gate

    def _check( self ):
        nc, nt = len( self.controls ), len( self.targets )
        kind = self.kind

        c_lo, c_hi, t_lo, t_hi = SHAPE[ kind ]
        if not ( _within( nc, c_lo, c_hi ) and _within( nt, t_lo, t_hi ) ):
            raise malformedGate( "%s with %d controls and %d targets" % ( kind, nc, nt ) )

        cq = [ c.qubit for c in self.controls ]
        if len( set( cq ) ) != nc or len( set( self.targets ) ) != nt:
            raise malformedGate( "%s with a repeated qubit" % kind )

        if set( cq ) & set( self.targets ):
            raise malformedGate( "%s with a qubit both control and target" % kind )

        if kind in INVERSE:
            if not self.targets[ 0 ].is_ancilla:
                raise malformedGate( "%s must target an ancilla" % kind )

        elif kind != "MultiTargetCX" and any( t.is_ancilla for t in self.targets ):
            raise malformedGate( "%s cannot write to an ancilla" % kind )

    @property
    def toffoli( self ):
        return toffoli_cost( self.kind, len( self.controls ) )

    @property
    def qubits( self ):
        return [ c.qubit for c in self.controls ] + list( self.targets )

    def inverse( self ):
        return Gate.of( INVERSE.get( self.kind, self.kind ), self.controls, self.targets )

    def __eq__( self, other ):
        return isinstance( other, Gate ) and ( self.kind, self.controls, self.targets ) == ( other.kind, other.controls, other.targets )

    def __ne__( self, other ):
        return not self == other

    def __hash__( self ):
        return hash( ( self.kind, self.controls, self.targets ) )

    def __str__( self ):
        mnemonic = LABEL[ self.kind ][ 0 ]
        controls = " ".join( str( c ) for c in self.controls )

        if self.kind == "Swap":
            return "SWAP %s %s" % self.targets

        elif self.kind == "ControlledPhaseFlip":
            return ( "CPF " + controls ).strip()

        elif self.kind == "X":
            return "X > " + ",".join( str( t ) for t in self.targets )

        else:
            return "%s %s > %s" % ( mnemonic, controls, ",".join( str( t ) for t in self.targets ) )

    def __repr__( self ):
        return "Gate( '%s' )" % self

def X( *targets ):
    return Gate( "X", (), targets )

def CX( ctrl, targets ):
    return Gate( "MultiTargetCX", [ ctrl ], targets )

def TOF( c1, c2, target ):
    return Gate( "Toffoli", [ c1, c2 ], [ target ] )

def SWAP( a, b ):
    return Gate( "Swap", (), [ a, b ] )

def AND( c1, c2, ancilla ):
    return Gate( "And", [ c1, c2 ], [ ancilla ] )

def ANDINV( c1, c2, ancilla ):
    return Gate( "AndInverse", [ c1, c2 ], [ ancilla ] )

def CPF( *controls ):
    return Gate( "ControlledPhaseFlip", controls, () )

################################################################################
#
#    Ancilla registry and cost ledger
#
################################################################################

class AncillaPool( object ):
    """
        Live/free registry of the ancilla ids. New ancillas always get the
        smallest id not currently live.

            >>> from SSP.circuit import AncillaPool
            >>> pool = AncillaPool()
            >>> pool.acquire( pool.fresh() ), pool.acquire( pool.fresh() )
            (0, 1)
            >>> pool.release( 0 )
            >>> pool.fresh(), pool.peak
            (0, 2)
    """
    def __init__( self ):
        self.live = set()
        self.released = set()
        self.peak = 0

    def fresh( self ):
        i = 0
        while i in self.live:
            i += 1

        return i

    def acquire( self, i ):
        self.live.add( i )
        self.released.discard( i )
        self.peak = max( self.peak, len( self.live ) )
        return i

    def release( self, i ):
        self.live.discard( i )
        self.released.add( i )

    def is_live( self, i ):
        return i in self.live

    def copy( self ):
        pool = AncillaPool()
        pool.live = set( self.live )
        pool.released = set( self.released )
        pool.peak = self.peak
        return pool

class CostLedger( object ):
    """
        Toffoli count (see Gate.toffoli; a two-control Toffoli or And costs
        one, Clifford gates nothing), peak number of live ancillas and a
        histogram of gate kinds.
    """
    def __init__( self ):
        self.toffoli = 0
        self.peak_ancillas = 0
        self.gate_histogram = Counter()

    def add( self, gate, live = 0 ):
        self.toffoli += gate.toffoli
        self.gate_histogram[ gate.kind ] += 1
        self.peak_ancillas = max( self.peak_ancillas, live )

    def merge( self, other, live = 0 ):
        self.toffoli += other.toffoli
        self.gate_histogram.update( other.gate_histogram )
        self.peak_ancillas = max( self.peak_ancillas, live + other.peak_ancillas )

    @classmethod
    def recount( cls, gates ):
        """
            Independent count over a gate list.

                >>> from SSP.circuit import CostLedger, AND, ANDINV, TOF, CX
                >>> gates = [ AND( "+q0", "+q1", "a0" ), TOF( "+a0", "-q2", 3 ), CX( "+q0", [ 3, 4 ] ), ANDINV( "+q0", "+q1", "a0" ) ]
                >>> CostLedger.recount( gates )
                CostLedger( toffoli=2, peak_ancillas=1 )
        """
        ledger = cls()
        live = set()

        for gate in gates:
            if gate.kind == "And":
                live.add( gate.targets[ 0 ].index )

            elif gate.kind == "AndInverse":
                live.discard( gate.targets[ 0 ].index )

            ledger.add( gate, len( live ) )

        return ledger

    def __eq__( self, other ):
        return (
            isinstance( other, CostLedger ) and
            ( self.toffoli, self.peak_ancillas ) == ( other.toffoli, other.peak_ancillas ) and
            +self.gate_histogram == +other.gate_histogram
        )

    def __ne__( self, other ):
        return not self == other

    def __repr__( self ):
        return "CostLedger( toffoli=%d, peak_ancillas=%d )" % ( self.toffoli, self.peak_ancillas )

################################################################################
#
#    Circuit
#
################################################################################

class Circuit( object ):
    """
        Ordered list of gates over a main register of `n` qubits (plus the
        extra qubit q<n> when `extra` is set) and an ancilla register. Every
        appended gate is checked against the registry, and the cost ledger
        is updated on the fly.

        :cvar int n: Width of the main register.
        :cvar bool extra: The circuit acts on the extra qubit q<n>.
        :cvar CostLedger cost: Toffoli count and ancilla peak.

        Usage:

            >>> from SSP.circuit import Circuit, AND, ANDINV, CX, TOF
            >>> c = Circuit( 4 )
            >>> a = c.fresh_ancilla()
            >>> c.append( AND( "+q0", "-q1", a ) ).append( CX( "+a0", [ 2, 3 ] ) ).append( ANDINV( "+q0", "-q1", a ) )
            Circuit object, n=4, 3 gates, 1 Toffoli
            >>> c.cost
            CostLedger( toffoli=1, peak_ancillas=1 )
            >>> c.append( CX( "+a0", [ 2 ] ) )
            Traceback (most recent call last):
                ...
            freedAncilla
            >>> c.append( TOF( "+q0", "+q1", 4 ) )
            Traceback (most recent call last):
                ...
            indexOutOfRange
    """
    def __init__( self, n, extra = False, gates = None ):
        self.n = n
        self.extra = bool( extra )
        self.gates = []
        self.pool = AncillaPool()
        self.cost = CostLedger()

        for gate in gates or []:
            self.append( gate )

    @property
    def width( self ):
        return self.n + int( self.extra )

    @property
    def closed( self ):
        return len( self.pool.live ) == 0

    def fresh_ancilla( self ):
        return Qubit( "a", self.pool.fresh() )

    def append( self, gate, check = True ):
        """
            Append a gate after checking it against the qubit registry. The
            synthesis and iteration builders, whose output is verified on the
            simulation oracle, skip the check with `check = False`; the
            ancilla registry and the ledger are kept up to date either way.

            :raise indexOutOfRange: if a main-register qubit does not exist
            :raise freedAncilla: if an ancilla is used while not live
            :raise malformedGate: if an And targets a live ancilla
        """
        if check:
            self._check_registry( gate )

        if gate.kind == "And":
            self.pool.acquire( gate.targets[ 0 ].index )

        elif gate.kind == "AndInverse":
            self.pool.release( gate.targets[ 0 ].index )

        self.gates.append( gate )
        self.cost.add( gate, len( self.pool.live ) )

        return self

    def _check_registry( self, gate ):
        for q in gate.qubits:
            if not q.is_ancilla:
                if q.index >= self.width:
                    raise indexOutOfRange( "%s on a circuit of width %d" % ( q, self.width ) )

            elif gate.kind == "And" and q == gate.targets[ 0 ]:
                if self.pool.is_live( q.index ):
                    raise malformedGate( "%s is already live" % q )

            elif not self.pool.is_live( q.index ):
                raise freedAncilla( "%s is used while not live in '%s'" % ( q, gate ) )

    def extend( self, other ):
        """
            Append all the gates of another circuit. Two closed circuits are
            spliced without re-checking every gate; their ledgers are merged.
        """
        gates = other.gates if isinstance( other, Circuit ) else list( other )

        if isinstance( other, Circuit ) and self.closed and other.closed and other.width <= self.width:
            self.gates.extend( gates )
            self.cost.merge( other.cost )
            self.pool.peak = max( self.pool.peak, other.pool.peak )

        else:
            for gate in gates:
                self.append( gate )

        return self

    def inverse( self ):
        """
            Reversed circuit with every gate inverted (And and AndInverse are
            exchanged, all other gates are self-inverse).

                >>> from SSP.circuit import Circuit, AND, ANDINV, TOF
                >>> c = Circuit( 3, gates = [ AND( "+q0", "+q1", "a0" ), TOF( "+a0", "+q1", 2 ), ANDINV( "+q0", "+q1", "a0" ) ] )
                >>> print( c.inverse().dump() )
                # n=3 extra=0
                # toffoli=2 peak_ancillas=1
                AND +q0 +q1 > a0
                TOF +a0 +q1 > q2
                ANDINV +q0 +q1 > a0
                >>> c.inverse().inverse() == c
                True
        """
        ret = Circuit( self.n, self.extra )
        for gate in reversed( self.gates ):
            ret.append( gate.inverse(), check = False )

        return ret

    def __len__( self ):
        return len( self.gates )

    def __iter__( self ):
        return iter( self.gates )

    def __eq__( self, other ):
        return isinstance( other, Circuit ) and ( self.n, self.extra, self.gates ) == ( other.n, other.extra, other.gates )

    def __ne__( self, other ):
        return not self == other

    def dump( self ):
        lines = [
            "# n=%d extra=%d" % ( self.n, int( self.extra ) ),
            "# toffoli=%d peak_ancillas=%d" % ( self.cost.toffoli, self.cost.peak_ancillas )
        ]
        lines.extend( str( gate ) for gate in self.gates )

        return "\n".join( lines )

    def __str__( self ):
        return self.dump()

    def __repr__( self ):
        return "Circuit object, n=%d, %d gates, %d Toffoli" % ( self.n, len( self.gates ), self.cost.toffoli )

def invert( c ):
    debug.debug( "inverting a circuit of %d gates" % len( c ), 2 )
    return c.inverse()
