#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from numbers import Integral

import numpy as np

from ..core.config import WORD_BITS
from ..core.exceptions import duplicateRow, indexOutOfRange, invalidParameter, widthMismatch
from ..core.functions import bits_to_int, ceil_log2, first_set, int_to_bits, pack_columns, unpack_columns
from ..core.logger import debug

################################################################################
#
#    Helpers
#
#        The tableau is stored bit-sliced (see SSP.core.functions): one array
#        of uint64 words per column, so that a single word operation updates
#        64 rows at once.
#
################################################################################

def _polarity( p ):
    if p in ( True, 1, "+" ):
        return True

    elif p in ( False, -1, 0, "-" ):
        return False

    else:
        raise invalidParameter( "unknown polarity %r" % ( p, ) )

def _to_matrix( rows ):
    if isinstance( rows, np.ndarray ):
        matrix = np.asarray( rows, dtype = np.uint8 )
        if matrix.ndim != 2:
            raise invalidParameter( "a tableau needs a 2-dimensional bit matrix" )

    else:
        strings = [ str( r ) if isinstance( r, ( str, BitRow ) ) else "".join( str( int( b ) ) for b in r ) for r in rows ]
        if len( strings ) == 0:
            raise invalidParameter( "empty support" )

        width = len( strings[ 0 ] )
        for i, r in enumerate( strings ):
            if len( r ) != width:
                raise widthMismatch( "row %d has %d bits, expected %d" % ( i, len( r ), width ) )

        matrix = np.frombuffer( "".join( strings ).encode( "ascii" ), dtype = np.uint8 ).reshape( len( strings ), width ) - ord( "0" )

    if matrix.size and matrix.max() > 1:
        raise invalidParameter( "bit matrix with values other than 0 and 1" )

    return matrix

################################################################################
#
#    Single row
#
################################################################################

class BitRow( object ):
    """
        Fixed-width bitstring. Position 0 is the leftmost, most significant,
        bit, as in the written bitstrings |C_i>.

            >>> from SSP.tableau import BitRow
            >>> row = BitRow( "0111011" )
            >>> row[ 1 ], row[ 3 ]
            (1, 1)
            >>> row.prefix( 3 ), row.suffix( 3 )
            (3, 11)
            >>> row[ 7 ]
            Traceback (most recent call last):
                ...
            indexOutOfRange
    """
    __slots__ = ( "value", "width" )

    def __init__( self, bits, width = None ):
        if isinstance( bits, BitRow ):
            self.value, self.width = bits.value, bits.width

        elif isinstance( bits, str ):
            if any( c not in "01" for c in bits ):
                raise invalidParameter( "'%s' is not a bitstring" % bits )

            self.value = int( bits, 2 ) if bits else 0
            self.width = len( bits )

        elif isinstance( bits, Integral ):
            if width is None or bits < 0 or bits >> width:
                raise invalidParameter( "%s does not fit in %s bits" % ( bits, width ) )

            self.value, self.width = int( bits ), width

        else:
            bits = [ int( b ) for b in bits ]
            self.value = bits_to_int( bits )
            self.width = len( bits )

    def __len__( self ):
        return self.width

    def __getitem__( self, position ):
        if not isinstance( position, Integral ) or not 0 <= position < self.width:
            raise indexOutOfRange( "bit %s of a %d-bit row" % ( position, self.width ) )

        return ( self.value >> ( self.width - 1 - position ) ) & 1

    def __iter__( self ):
        for position in range( self.width ):
            yield ( self.value >> ( self.width - 1 - position ) ) & 1

    def __eq__( self, other ):
        if isinstance( other, str ):
            other = BitRow( other )

        return isinstance( other, BitRow ) and ( self.value, self.width ) == ( other.value, other.width )

    def __ne__( self, other ):
        return not self == other

    def __hash__( self ):
        return hash( ( self.value, self.width ) )

    def prefix( self, l ):
        """
            Integer value of the first `l` bits (the subspace register).
        """
        return self.value >> ( self.width - l )

    def suffix( self, l ):
        """
            Integer value of the bits after position `l`.
        """
        return self.value & ( ( 1 << ( self.width - l ) ) - 1 )

    def __str__( self ):
        return int_to_bits( self.value, self.width )

    def __repr__( self ):
        return "BitRow( '%s' )" % self

################################################################################
#
#    Tableau
#
################################################################################

class Tableau( object ):
    """
        Classical tableau of an s-sparse state: s distinct rows of n bits (plus
        an optional extra column holding the |1> qubit of the sign-fixing
        synthesis) and a sign per row.

        The row operations return a new tableau unless called with
        `inplace = True`; the synthesis drivers work on a private copy.

        :cvar int s: Number of rows.
        :cvar int n: Number of qubits, extra column excluded.
        :cvar int l: Width of the subspace register, ceil( log2( s ) ).
        :cvar bool has_extra: Column n holds the extra qubit.

        Usage:

            >>> from SSP.tableau import Tableau
            >>> t = Tableau( [ "0111011", "1110111", "1001010" ] )
            >>> t
            Tableau object, s=3, n=7, l=2
            >>> print( t )
            01|11011 +
            11|10111 +
            10|01010 +
            >>> Tableau( [ "01", "01" ] )
            Traceback (most recent call last):
                ...
            duplicateRow
    """
    def __init__( self, rows, signs = None, has_extra = False ):
        self._load( _to_matrix( rows ), signs, has_extra )

    def _load( self, matrix, signs, has_extra ):
        s, n_cols = matrix.shape

        if s < 1:
            raise invalidParameter( "empty support" )

        n = n_cols - int( bool( has_extra ) )
        if n < 0 or ( n < WORD_BITS and s > 2 ** n ):
            raise invalidParameter( "%d rows do not fit on %d qubits" % ( s, n ) )

        packed = np.packbits( matrix[ :, :n ], axis = 1 ) if n > 0 else np.zeros( ( s, 1 ), dtype = np.uint8 )
        if s > 1 and len( np.unique( packed, axis = 0 ) ) != s:
            seen = {}
            for i in range( s ):
                key = packed[ i ].tobytes()
                if key in seen:
                    raise duplicateRow( "rows %d and %d are identical" % ( seen[ key ], i ) )
                seen[ key ] = i

        self._s = s
        self._n_cols = n_cols
        self._has_extra = bool( has_extra )
        self._cols = pack_columns( matrix )
        self._valid = pack_columns( np.ones( ( s, 1 ), dtype = np.uint8 ) )[ 0 ]

        if signs is None:
            self._phase = np.zeros_like( self._valid )

        else:
            signs = list( signs )
            if len( signs ) != s or any( a not in ( 1, -1 ) for a in signs ):
                raise invalidParameter( "expected %d signs in {+1, -1}" % s )

            self._phase = pack_columns( np.array( [ [ a == -1 ] for a in signs ], dtype = np.uint8 ) )[ 0 ]

        debug.debug( "Tableau loaded: s=%d, n=%d, extra=%s" % ( s, n, self._has_extra ), 2 )

    @classmethod
    def from_matrix( cls, matrix, signs = None, has_extra = False ):
        t = cls.__new__( cls )
        t._load( _to_matrix( matrix ), signs, has_extra )
        return t

    ############################################################################
    #
    #    Shape
    #
    ############################################################################

    @property
    def s( self ):
        return self._s

    @property
    def n( self ):
        return self._n_cols - int( self._has_extra )

    @property
    def n_cols( self ):
        return self._n_cols

    @property
    def l( self ):
        return ceil_log2( self._s )

    @property
    def has_extra( self ):
        return self._has_extra

    ############################################################################
    #
    #    Row access
    #
    ############################################################################

    def _check_row( self, i ):
        if not isinstance( i, Integral ) or not 0 <= i < self._s:
            raise indexOutOfRange( "row %s of a %d-row tableau" % ( i, self._s ) )

    def _check_column( self, q ):
        if not isinstance( q, Integral ) or not 0 <= q < self._n_cols:
            raise indexOutOfRange( "column %s of a %d-column tableau" % ( q, self._n_cols ) )

    def row_bits( self, i ):
        """
            Bits of row `i` as a numpy array of 0/1, extra column included.
        """
        self._check_row( i )

        bits = ( self._cols[ :, i // WORD_BITS ] >> np.uint64( i % WORD_BITS ) ) & np.uint64( 1 )
        return bits.astype( np.uint8 )

    def row( self, i ):
        """
            Row `i` as a BitRow.

                >>> from SSP.tableau import Tableau
                >>> t = Tableau( [ "0111011", "1110111" ] )
                >>> t.row( 1 )
                BitRow( '1110111' )
        """
        return BitRow( self.row_bits( i ).tolist() )

    @property
    def rows( self ):
        return [ BitRow( "".join( map( str, r ) ) ) for r in self.matrix().tolist() ]

    def sign( self, i ):
        self._check_row( i )

        return -1 if ( int( self._phase[ i // WORD_BITS ] ) >> ( i % WORD_BITS ) ) & 1 else 1

    @property
    def signs( self ):
        return [ -1 if b else 1 for b in unpack_columns( self._phase[ None, : ], self._s )[ :, 0 ].tolist() ]

    def matrix( self ):
        """
            Copy of the tableau as a ( s, n_cols ) numpy array of 0/1.
        """
        return unpack_columns( self._cols, self._s )

    def address( self, i ):
        """
            Value of the subspace register (first l columns) of row `i`.

                >>> from SSP.tableau import Tableau
                >>> Tableau( [ "0111011", "1110111", "1001010" ] ).address( 2 )
                2
        """
        return bits_to_int( self.row_bits( i )[ :self.l ].tolist() )

    def addresses( self ):
        """
            Subspace register values of every row, as a numpy int64 array.
        """
        l = self.l
        if l == 0:
            return np.zeros( self._s, dtype = np.int64 )

        bits = unpack_columns( self._cols[ :l ], self._s ).astype( np.int64 )
        weights = np.int64( 1 ) << np.arange( l - 1, -1, -1, dtype = np.int64 )
        return bits.dot( weights )

    def is_subspace( self, i ):
        """
            True if the row has only zeros outside the subspace register
            (extra column excluded).
        """
        return not self.row_bits( i )[ self.l:self.n ].any()

    ############################################################################
    #
    #    Row masks (one bit per row, packed like a column)
    #
    ############################################################################

    def column( self, q ):
        self._check_column( q )
        return self._cols[ q ].copy()

    def match( self, literals, within = None ):
        """
            Mask of the rows matching every ( column, polarity ) literal,
            among the rows of the mask `within` (all rows when None).

                >>> from SSP.tableau import Tableau
                >>> t = Tableau( [ "000", "110", "011", "101" ] )
                >>> t.mask_rows( t.match( [ ( 0, "+" ) ] ) ), t.mask_rows( t.match( [ ( 0, "+" ), ( 1, "-" ) ] ) )
                ([1, 3], [3])
                >>> t.mask_rows( t.match( [ ( 2, "+" ) ], within = t.rows_mask( [ 0, 1, 2 ] ) ) )
                [2]
        """
        mask = self._valid.copy() if within is None else within & self._valid

        for q, p in literals:
            q = int( q )
            self._check_column( q )

            if _polarity( p ):
                mask &= self._cols[ q ]
            else:
                mask &= ~self._cols[ q ]

        return mask

    def any_mask( self, start, stop ):
        """
            Mask of the rows with at least one 1 in the columns [start, stop).
        """
        if start >= stop:
            return np.zeros_like( self._valid )

        return np.bitwise_or.reduce( self._cols[ start:stop ], axis = 0 ) & self._valid

    def rows_mask( self, rows ):
        mask = np.zeros_like( self._valid )
        for i in rows:
            self._check_row( i )
            mask[ i // WORD_BITS ] |= np.uint64( 1 << ( i % WORD_BITS ) )

        return mask

    def mask_rows( self, mask ):
        """
            Row indices set in a mask, in increasing order.
        """
        bits = np.unpackbits( mask.astype( "<u8" ).view( np.uint8 ), bitorder = "little" )[ :self._s ]
        return np.flatnonzero( bits ).tolist()

    @staticmethod
    def first( mask ):
        """
            Smallest row index set in a mask, None for an empty mask.
        """
        return first_set( mask )

    ############################################################################
    #
    #    Row operations
    #
    ############################################################################

    def _target( self, inplace ):
        return self if inplace else self.copy()

    def cx( self, control, targets, inplace = False ):
        """
            Multi-target CX: flip the `targets` columns of every row having a
            1 in the `control` column.

            :param control: Control column.
            :type control: int

            :param targets: Target columns.
            :type targets: iterable of int

            :raise indexOutOfRange: if a column does not exist
            :raise invalidParameter: if the control is also a target

            Usage:

                >>> from SSP.tableau import Tableau
                >>> t = Tableau( [ "1011", "0111" ] )
                >>> print( t.cx( 0, { 2, 3 } ) )
                1|000 +
                0|111 +
                >>> t.cx( 0, { 0, 3 } )
                Traceback (most recent call last):
                    ...
                invalidParameter
        """
        targets = sorted( set( targets ) )

        self._check_column( control )
        for q in targets:
            self._check_column( q )

        if control in targets:
            raise invalidParameter( "control %d among the targets" % control )

        t = self._target( inplace )
        source = t._cols[ control ]
        for q in targets:
            np.bitwise_xor( t._cols[ q ], source, out = t._cols[ q ] )

        return t

    def toffoli( self, controls, target, inplace = False ):
        """
            Flip the `target` column on the rows matching all the signed
            controls, given as ( column, polarity ) pairs. Any number of
            controls is accepted, which also models multi-controlled X.

                >>> from SSP.tableau import Tableau
                >>> t = Tableau( [ "1001000", "1010100", "1011000" ] )
                >>> print( t.toffoli( [ ( 2, "+" ), ( 3, "+" ) ], 5 ) )
                10|01000 +
                10|10100 +
                10|11010 +
                >>> t.toffoli( [], 5 )
                Traceback (most recent call last):
                    ...
                invalidParameter
        """
        controls = [ ( int( q ), _polarity( p ) ) for q, p in controls ]

        if len( controls ) == 0:
            raise invalidParameter( "a Toffoli needs at least one control" )

        self._check_column( target )
        if target in [ q for q, _ in controls ]:
            raise invalidParameter( "target %d among the controls" % target )

        t = self._target( inplace )
        t._cols[ target ] ^= t.match( controls )

        return t

    def swap( self, a, b, inplace = False ):
        """
            Exchange the columns `a` and `b`.

                >>> from SSP.tableau import Tableau
                >>> print( Tableau( [ "10", "01" ] ).swap( 0, 1 ) )
                0|1 +
                1|0 +
                >>> Tableau( [ "10", "01" ] ).swap( 1, 1 )
                Traceback (most recent call last):
                    ...
                invalidParameter
        """
        self._check_column( a )
        self._check_column( b )

        if a == b:
            raise invalidParameter( "swap of column %d with itself" % a )

        t = self._target( inplace )
        t._cols[ [ a, b ] ] = t._cols[ [ b, a ] ]

        return t

    def flip( self, mask, columns, inplace = False ):
        """
            XOR a row mask into the given columns.
        """
        t = self._target( inplace )

        columns = sorted( set( columns ) )
        for q in columns:
            t._check_column( q )

        mask = mask & t._valid
        for q in columns:
            np.bitwise_xor( t._cols[ q ], mask, out = t._cols[ q ] )

        return t

    def negate( self, mask, inplace = False ):
        """
            Flip the sign of the rows of a mask.
        """
        t = self._target( inplace )
        t._phase ^= mask & t._valid

        return t

    def find_row( self, predicate ):
        """
            Smallest index of a row satisfying `predicate( BitRow )`, None if
            no row does.

                >>> from SSP.tableau import Tableau
                >>> t = Tableau( [ "000", "110", "011", "101" ] )
                >>> t.find_row( lambda row: row[ 2 ] == 1 )
                2
                >>> t.find_row( lambda row: row.value == 7 ) is None
                True
        """
        for i in range( self._s ):
            if predicate( self.row( i ) ):
                return i

        return None

    ############################################################################
    #
    #    Derived tableaux
    #
    ############################################################################

    def copy( self ):
        t = self.__class__.__new__( self.__class__ )
        t._s = self._s
        t._n_cols = self._n_cols
        t._has_extra = self._has_extra
        t._cols = self._cols.copy()
        t._valid = self._valid.copy()
        t._phase = self._phase.copy()
        return t

    def with_extra( self ):
        """
            Copy with an extra column set to 1 on every row.

                >>> from SSP.tableau import Tableau
                >>> print( Tableau( [ "01", "10" ] ).with_extra() )
                0|1|1 +
                1|0|1 +
        """
        if self._has_extra:
            return self.copy()

        t = self.copy()
        t._cols = np.vstack( [ t._cols, t._valid[ None, : ] ] )
        t._n_cols += 1
        t._has_extra = True
        return t

    def with_signs( self, signs = None ):
        """
            Copy with new row signs; all +1 when `signs` is None.
        """
        t = self.copy()

        if signs is None:
            t._phase = np.zeros_like( t._valid )

        else:
            signs = list( signs )
            if len( signs ) != self._s or any( a not in ( 1, -1 ) for a in signs ):
                raise invalidParameter( "expected %d signs in {+1, -1}" % self._s )

            t._phase = pack_columns( np.array( [ [ a == -1 ] for a in signs ], dtype = np.uint8 ) )[ 0 ]

        return t

    def pad( self, k ):
        """
            Copy with `k` zero columns appended to the main register.

                >>> from SSP.tableau import Tableau
                >>> print( Tableau( [ "01", "10" ] ).pad( 2 ) )
                0|100 +
                1|000 +
        """
        matrix = self.matrix()
        zeros = np.zeros( ( self._s, k ), dtype = np.uint8 )
        matrix = np.hstack( [ matrix[ :, :self.n ], zeros, matrix[ :, self.n: ] ] )
        return Tableau.from_matrix( matrix, self.signs, self._has_extra )

    ############################################################################
    #
    #    Comparison and printing
    #
    ############################################################################

    def __eq__( self, other ):
        return (
            isinstance( other, Tableau ) and
            ( self._s, self._n_cols, self._has_extra ) == ( other._s, other._n_cols, other._has_extra ) and
            np.array_equal( self._cols, other._cols ) and
            np.array_equal( self._phase, other._phase )
        )

    def __ne__( self, other ):
        return not self == other

    def dump( self ):
        """
            Printable tableau, one row per line, with the subspace register and
            the extra column separated by '|'.
        """
        l, n = self.l, self.n
        lines = []
        for bits, sign in zip( self.matrix().tolist(), self.signs ):
            text = "".join( map( str, bits ) )
            parts = [ text[ :l ], text[ l:n ] ] if l > 0 else [ text[ :n ] ]
            if self._has_extra:
                parts.append( text[ n: ] )

            lines.append( "%s %s" % ( "|".join( parts ), "+" if sign == 1 else "-" ) )

        return "\n".join( lines )

    def __str__( self ):
        return self.dump()

    def __repr__( self ):
        return "Tableau object, s=%d, n=%d, l=%d%s" % ( self._s, self.n, self.l, ", extra" if self._has_extra else "" )

################################################################################
#
#    Functional interface (never mutates its argument)
#
################################################################################

def apply_cx( t, control, targets ):
    """
            >>> from SSP.tableau import Tableau, apply_cx
            >>> print( apply_cx( Tableau( [ "0011100", "0000000" ] ), 4, { 0, 3 } ) )
            1|010100 +
            0|000000 +
    """
    return t.cx( control, targets )

def apply_toffoli( t, controls, target ):
    """
            >>> from SSP.tableau import Tableau, apply_toffoli
            >>> print( apply_toffoli( Tableau( [ "10000", "01000" ] ), [ ( 0, "-" ) ], 4 ) )
            1|0000 +
            0|1001 +
    """
    return t.toffoli( controls, target )

def apply_swap( t, a, b ):
    return t.swap( a, b )

def find_row( t, predicate ):
    """
            >>> from SSP.tableau import find_row
            >>> find_row( fig3, lambda row: row.suffix( fig3.l ) != 0 )
            0
            >>> find_row( fig3, lambda row: row.value == 0 ) is None
            True
    """
    return t.find_row( predicate )
