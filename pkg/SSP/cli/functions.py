#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division

from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import csv
import io
import time

import numpy as np

from ..core.config import RESTRICTED_PHASE, RNG_ALGORITHM, SAMPLER_VERSION
from ..core.exceptions import parseError, verificationError, verificationFailed
from ..core.functions import ceil_log2
from ..core.logger import debug
from ..costmodel import improvement_table
from ..isometry import synthesize
from ..pui import AddressAction
from ..tableau.functions import random_support

BenchRecord = namedtuple( "BenchRecord", [ "s", "n", "seed", "mode", "toffoli_measured", "toffoli_bound", "ancilla_peak", "wall_seconds" ] )

################################################################################
#
#    Benchmark harness
#
#        Every (s, n, trial) cell draws its support from its own generator,
#        seeded from SeedSequence( [ seed, s, n, trial ] ), so that a cell
#        does not depend on the other cells nor on the number of workers.
#
################################################################################

def trial_seed( seed, s, n, trial ):
    """
        Seed of one benchmark cell; `random_support( s, n, trial_seed( ... ) )`
        reproduces its support.

            >>> from SSP.cli.functions import trial_seed
            >>> trial_seed( 1, 8, 5, 0 ) == trial_seed( 1, 8, 5, 0 ) != trial_seed( 1, 8, 5, 1 )
            True
    """
    return int( np.random.SeedSequence( [ seed, s, n, trial ] ).generate_state( 1, np.uint32 )[ 0 ] )

def feasible( s, n ):
    """
            >>> from SSP.cli.functions import feasible
            >>> feasible( 8, 3 ), feasible( 9, 3 ), feasible( 0, 3 )
            (True, False, False)
    """
    return s >= 1 and s <= 2 ** n and n >= ceil_log2( s )

def bench_cell( cell ):
    """
        Synthesize and verify one random support with every mode.

        :param cell: ( s, n, seed, trial, modes, timing )
        :type cell: tuple

        :return: One record per mode.
        :rtype: list of BenchRecord

        :raise verificationFailed: with the reproducer of the failing cell

        Usage:

            >>> from SSP.cli.functions import bench_cell
            >>> recs = bench_cell( ( 8, 6, 1, 0, [ "unrestricted", "restricted_phase", "malvetti" ], False ) )
            >>> [ ( r.mode, r.toffoli_measured <= r.toffoli_bound, r.wall_seconds ) for r in recs ]
            [('unrestricted', True, 0), ('restricted_phase', True, 0), ('malvetti', True, 0)]
    """
    s, n, seed, trial, modes, timing = cell

    cell_seed = trial_seed( seed, s, n, trial )
    t = random_support( s, n, cell_seed, signs = True )

    ret = []
    for mode in modes:
        start = time.perf_counter()
        res = synthesize( t, mode, t.signs if mode == RESTRICTED_PHASE else None )
        elapsed = time.perf_counter() - start

        reproducer = "s=%d n=%d seed=%d trial=%d mode=%s (support seed %d)" % ( s, n, seed, trial, mode, cell_seed )

        try:
            res.verify()

        except verificationError as e:
            raise verificationFailed( "%s: %s" % ( reproducer, e ) )

        bound = res.cost.isometry_toffoli_bound
        if res.toffoli > bound:
            raise verificationFailed( "%s: %d Toffoli above the bound %s" % ( reproducer, res.toffoli, bound ) )

        ret.append( BenchRecord(
            s, n, seed, mode,
            res.toffoli,
            -( -bound.numerator // bound.denominator ),
            res.ancilla_peak,
            round( elapsed, 6 ) if timing else 0
        ) )

    debug.debug( "cell s=%d n=%d trial=%d done" % ( s, n, trial ), 1 )

    return ret

def run_bench( s_values, n_values, trials, seed, modes, jobs = 1, timing = True ):
    """
        Run every feasible (s, n, trial) cell, in parallel when `jobs` > 1.
        Records come out sorted by ( s, n, trial, mode order ) whatever the
        number of workers.

        :return: The records and the skipped ( s, n ) pairs.
        :rtype: tuple

        Usage:

            >>> from SSP.cli.functions import run_bench
            >>> records, skipped = run_bench( [ 4, 64 ], [ 4 ], 2, 7, [ "unrestricted" ], timing = False )
            >>> [ ( r.s, r.n ) for r in records ], skipped
            ([(4, 4), (4, 4)], [(64, 4)])
    """
    cells = []
    skipped = []

    for s in sorted( s_values ):
        for n in sorted( n_values ):
            if not feasible( s, n ):
                debug.warning( "skipping s=%d n=%d: no %d distinct rows on %d qubits" % ( s, n, s, n ) )
                skipped.append( ( s, n ) )
                continue

            for trial in range( trials ):
                cells.append( ( s, n, seed, trial, list( modes ), timing ) )

    if jobs > 1 and len( cells ) > 1:
        with ProcessPoolExecutor( max_workers = jobs ) as pool:
            results = list( pool.map( bench_cell, cells ) )

    else:
        results = [ bench_cell( cell ) for cell in cells ]

    records = [ rec for res in results for rec in res ]

    debug.info( "%d benchmark records, %d pairs skipped" % ( len( records ), len( skipped ) ) )

    return records, skipped

def format_bench_csv( records, skipped, seed ):
    """
        CSV text of a benchmark run, with the generator identification in
        a leading comment.

            >>> from SSP.cli.functions import BenchRecord, format_bench_csv
            >>> print( format_bench_csv( [ BenchRecord( 8, 6, 1, "unrestricted", 3, 5, 2, 0 ) ], [ ( 64, 4 ) ], 1 ) )
            # rng=numpy.PCG64 sampler=rejection-v1 seed=1
            s,n,seed,mode,toffoli_measured,toffoli_bound,ancilla_peak,wall_seconds
            8,6,1,unrestricted,3,5,2,0
            # skipped s=64 n=4
    """
    fp = io.StringIO()
    fp.write( u"# rng=%s sampler=%s seed=%d\n" % ( RNG_ALGORITHM, SAMPLER_VERSION, seed ) )

    writer = csv.writer( fp, lineterminator = "\n" )
    writer.writerow( BenchRecord._fields )
    for rec in records:
        writer.writerow( rec )

    for s, n in skipped:
        fp.write( u"# skipped s=%d n=%d\n" % ( s, n ) )

    return fp.getvalue().rstrip( "\n" )

################################################################################
#
#    Improvement factors
#
################################################################################

def format_improvement_csv( s_values, n_values ):
    """
            >>> from SSP.cli.functions import format_improvement_csv
            >>> print( format_improvement_csv( [ 1024 ], [ 10, 12 ] ) )
            s,n,factor,best
            1024,10,,
            1024,12,3.250794,3.250794
    """
    fp = io.StringIO()
    writer = csv.writer( fp, lineterminator = "\n" )
    writer.writerow( [ "s", "n", "factor", "best" ] )

    for row in improvement_table( s_values, n_values ):
        writer.writerow( [
            row.s, row.n,
            "" if row.factor is None else "%.6f" % row.factor,
            "" if row.best is None else "%.6f" % row.best
        ] )

    return fp.getvalue().rstrip( "\n" )

################################################################################
#
#    Action files of the standalone partial unary iteration
#
#        One line per address: '<address> <targets|-> [Z] [E]', targets
#        being comma separated qubit indices, Z a phase flip and E the
#        clearing of the extra qubit.
#
################################################################################

def parse_actions( text ):
    """
            >>> from SSP.cli.functions import parse_actions
            >>> actions = parse_actions( "4 3\\n6 3,5 Z\\n5 - E" )
            >>> sorted( actions.items() )
            [(4, AddressAction( x_targets=[3], phase_flip=False, clear_extra=False )), (5, AddressAction( x_targets=[], phase_flip=False, clear_extra=True )), (6, AddressAction( x_targets=[3, 5], phase_flip=True, clear_extra=False ))]
            >>> parse_actions( "4 3 Q" )
            Traceback (most recent call last):
                ...
            parseError: line 1: unknown flag 'Q'
    """
    actions = {}

    for lineno, line in enumerate( text.splitlines(), 1 ):
        line = line.split( "#", 1 )[ 0 ].strip()
        if line == "":
            continue

        tokens = line.split()
        if len( tokens ) < 2 or not tokens[ 0 ].isdigit():
            raise parseError( "line %d: expected '<address> <targets|-> [Z] [E]', got '%s'" % ( lineno, line ) )

        if tokens[ 1 ] == "-":
            targets = []

        else:
            try:
                targets = [ int( q ) for q in tokens[ 1 ].split( "," ) ]

            except ValueError:
                raise parseError( "line %d: '%s' is not a list of qubits" % ( lineno, tokens[ 1 ] ) )

        for flag in tokens[ 2: ]:
            if flag not in ( "Z", "E" ):
                raise parseError( "line %d: unknown flag '%s'" % ( lineno, flag ) )

        address = int( tokens[ 0 ] )
        if address in actions:
            raise parseError( "line %d: address %d given twice" % ( lineno, address ) )

        actions[ address ] = AddressAction( targets, phase_flip = "Z" in tokens[ 2: ], clear_extra = "E" in tokens[ 2: ] )

    return actions

def read_actions( path ):
    with io.open( path, "r", encoding = "utf-8" ) as fp:
        return parse_actions( fp.read() )
