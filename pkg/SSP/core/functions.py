#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

import numpy as np

from .config import WORD_BITS
from .exceptions import invalidParameter, notPowerOfTwo, parseError

################################################################################
#
#    Powers of two
#
################################################################################

def ceil_log2( value ):
    """
        Smallest integer `l` such that 2^l >= value. This is the width of the
        subspace register for a support of size `value`.

        :param value: Positive integer.
        :type value: int

        :return: ceil( log2( value ) )
        :rtype: int

        :raise invalidParameter: if the value is not positive

        Usage:

            >>> from SSP.core.functions import ceil_log2
            >>> ceil_log2( 1 )
            0
            >>> ceil_log2( 7 )
            3
            >>> ceil_log2( 8 )
            3
            >>> ceil_log2( 1025 )
            11
    """
    if value < 1:
        raise invalidParameter( "ceil_log2 needs a positive value, got %s" % value )

    return ( value - 1 ).bit_length()

def max_power_of_two( value ):
    """
        Largest power of two smaller or equal to `value`, 0 if value < 1.

            >>> from SSP.core.functions import max_power_of_two
            >>> max_power_of_two( 4 )
            4
            >>> max_power_of_two( 13 )
            8
            >>> max_power_of_two( 0 )
            0
    """
    if value < 1:
        return 0

    return 1 << ( value.bit_length() - 1 )

def is_power_of_two( value ):
    """
            >>> from SSP.core.functions import is_power_of_two
            >>> is_power_of_two( 1 ), is_power_of_two( 12 ), is_power_of_two( 64 )
            (True, False, True)
    """
    return value >= 1 and value & ( value - 1 ) == 0

def log2_exact( value ):
    """
        Exponent of a power of two.

            >>> from SSP.core.functions import log2_exact
            >>> log2_exact( 32 )
            5
            >>> log2_exact( 12 )
            Traceback (most recent call last):
                ...
            notPowerOfTwo
    """
    if not is_power_of_two( value ):
        raise notPowerOfTwo( "%s is not a power of two" % value )

    return value.bit_length() - 1

def popcount( value ):
    """
        Hamming weight of a non-negative integer.

            >>> from SSP.core.functions import popcount
            >>> popcount( 0b1011 )
            3
    """
    return bin( value ).count( "1" )

################################################################################
#
#    Bitstrings (big-endian: position 0 is the most significant bit)
#
################################################################################

def bits_to_int( bits ):
    """
        Convert a bitstring, or an iterable of 0/1, to its integer value; the
        first character is the most significant bit.

            >>> from SSP.core.functions import bits_to_int
            >>> bits_to_int( "011" )
            3
            >>> bits_to_int( [ 1, 0, 0 ] )
            4
            >>> bits_to_int( "" )
            0
    """
    value = 0
    for b in bits:
        value = ( value << 1 ) | int( b )

    return value

def int_to_bits( value, width ):
    """
        Convert an integer to a bitstring of the given width.

            >>> from SSP.core.functions import int_to_bits
            >>> int_to_bits( 3, 3 )
            '011'
            >>> int_to_bits( 0, 0 )
            ''
    """
    if width == 0:
        return ""

    return format( value, "0%db" % width )

def bit_at( value, position, width ):
    """
        Bit of `value` at the big-endian `position` of a `width`-bit word.

            >>> from SSP.core.functions import bit_at
            >>> [ bit_at( 6, p, 3 ) for p in range( 3 ) ]
            [1, 1, 0]
    """
    return ( value >> ( width - 1 - position ) ) & 1

################################################################################
#
#    Bit-sliced columns
#
#        A ( rows, columns ) 0/1 matrix is stored as one array of uint64 words
#        per column, row i living in word i // 64 at bit i % 64. One word
#        operation therefore acts on 64 rows at once. The tableau and the
#        simulation oracle share this layout.
#
################################################################################

def words( rows ):
    return max( 1, ( rows + WORD_BITS - 1 ) // WORD_BITS )

def pack_columns( matrix ):
    """
        Bit-slice a ( rows, columns ) 0/1 matrix into a ( columns, words )
        uint64 array.

            >>> import numpy as np
            >>> from SSP.core.functions import pack_columns, unpack_columns
            >>> cols = pack_columns( np.array( [ [ 1, 0 ], [ 1, 1 ], [ 0, 1 ] ] ) )
            >>> cols.tolist()
            [[3], [6]]
            >>> unpack_columns( cols, 3 ).tolist()
            [[1, 0], [1, 1], [0, 1]]
    """
    matrix = np.asarray( matrix, dtype = np.uint8 )
    s, c = matrix.shape

    packed = np.packbits( np.ascontiguousarray( matrix.T ), axis = 1, bitorder = "little" )
    padded = np.zeros( ( c, words( s ) * 8 ), dtype = np.uint8 )
    padded[ :, :packed.shape[ 1 ] ] = packed

    return padded.view( "<u8" ).astype( np.uint64 )

def unpack_columns( cols, rows ):
    raw = np.ascontiguousarray( cols ).astype( "<u8" ).view( np.uint8 ).reshape( cols.shape[ 0 ], cols.shape[ 1 ] * 8 )

    return np.unpackbits( raw, axis = 1, bitorder = "little" )[ :, :rows ].T

def first_set( mask ):
    """
        Smallest row index set in a packed row mask, None for an empty mask.

            >>> import numpy as np
            >>> from SSP.core.functions import first_set
            >>> first_set( np.array( [ 0, 12 ], dtype = np.uint64 ) ), first_set( np.zeros( 2, dtype = np.uint64 ) )
            (66, None)
    """
    nz = np.flatnonzero( mask )
    if nz.size == 0:
        return None

    w = int( nz[ 0 ] )
    word = int( mask[ w ] )
    return w * WORD_BITS + ( word & -word ).bit_length() - 1

################################################################################
#
#    Integer lists on the command line
#
################################################################################

def int_list( text ):
    """
        Parse a comma separated list of integers; ranges are written `a:b`
        (inclusive) or `a:b:step`.

            >>> from SSP.core.functions import int_list
            >>> int_list( "1,2,7" )
            [1, 2, 7]
            >>> int_list( "16:64:16" )
            [16, 32, 48, 64]
            >>> int_list( "1,x" )
            Traceback (most recent call last):
                ...
            parseError
    """
    ret = []

    try:
        for token in text.split( "," ):
            token = token.strip()
            if token == "":
                continue

            if ":" in token:
                parts = [ int( p ) for p in token.split( ":" ) ]
                start, stop = parts[ 0 ], parts[ 1 ]
                step = parts[ 2 ] if len( parts ) > 2 else 1
                ret.extend( range( start, stop + 1, step ) )

            else:
                ret.append( int( token ) )

    except ValueError:
        raise parseError( "not a list of integers: '%s'" % text )

    return ret
