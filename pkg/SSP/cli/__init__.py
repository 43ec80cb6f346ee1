#!/usr/bin/python
# -*- coding: UTF-8 -*-

from __future__ import absolute_import, division, print_function

import argparse
import io
import sys

from ..circuit.functions import read_circuit, write_circuit
from ..core.config import EXIT_IO, EXIT_OK, EXIT_VALIDATION, EXIT_VERIFICATION
from ..core.config import DEFAULT_ANGLE_BITS, DEFAULT_SAMPLE_SEED, ISOMETRY_MODES, PUI_MODES, SYNTHESIS_MODES, UNRESTRICTED
from ..core.exceptions import validationError, verificationError, verificationFailed, widthMismatch
from ..core.functions import int_list
from ..core.logger import configure, debug
from ..costmodel import CostReport, PipelineParams, estimate, lemma_brute_force, lemma_table, optimal_split, sweep_r
from ..costmodel.functions import dense_prep_optimal
from ..isometry import synthesize
from ..isometry.functions import format_cost_report, read_mapping, write_cost_report, write_mapping
from ..pui import PuiRequest, build_pui
from ..pui.functions import pui_bound
from ..simverify import check_permutation
from ..simverify.functions import verify_rows
from ..tableau.functions import read_state_file
from .functions import format_bench_csv, format_improvement_csv, read_actions, run_bench

################################################################################
#
#    Sub-commands
#
#        Each command takes the parsed arguments and returns the exit code;
#        errors are raised and mapped to exit codes by `main`.
#
################################################################################

def _output( text, path ):
    if path is None:
        print( text )

    else:
        with io.open( path, "w", encoding = "utf-8" ) as fp:
            fp.write( text + "\n" )

        debug.info( "written to %s" % path )

def cmd_synthesize( args ):
    t = read_state_file( args.state )
    res = synthesize( t, args.mode )

    if not args.no_verify:
        res.verify()

    prefix = args.out or args.state.rsplit( ".", 1 )[ 0 ]

    write_circuit( res.g_forward, prefix + ".fwd.qc" )
    write_circuit( res.g_isometry, prefix + ".iso.qc" )
    write_mapping( res, prefix + ".map" )
    write_cost_report( res, prefix + ".cost" )

    print( format_cost_report( res ) )

    return EXIT_OK

def cmd_verify( args ):
    t = read_state_file( args.state )
    c = read_circuit( args.circuit )
    f = read_mapping( args.mapping )

    if len( f ) != t.s:
        raise widthMismatch( "mapping of %d rows for a support of %d rows" % ( len( f ), t.s ) )

    signs = t.signs if c.extra else None
    report = verify_rows( c, t, f, signs, isometry = args.isometry, seed = args.seed )

    if args.exhaustive:
        if not check_permutation( c ).is_permutation:
            raise verificationFailed( "the circuit is not a permutation of the basis states" )

    print( "ok: %d rows, %d samples%s" % ( report.rows, report.samples, ", exhaustive" if args.exhaustive else "" ) )

    return EXIT_OK

def cmd_bench( args ):
    records, skipped = run_bench(
        int_list( args.s ), int_list( args.n ), args.trials, args.seed,
        [ m.replace( "-", "_" ) for m in args.modes.split( "," ) ],
        jobs = args.jobs,
        timing = not args.no_timing
    )

    _output( format_bench_csv( records, skipped, args.seed ), args.out )

    return EXIT_OK

def cmd_improvement_table( args ):
    _output( format_improvement_csv( int_list( args.s ), int_list( args.n ) ), args.out )

    return EXIT_OK

def cmd_estimate( args ):
    reports = []

    for n in int_list( args.n ):
        for s in int_list( args.s ):
            params = PipelineParams( n, s, args.b, 0, args.real, args.mode.replace( "-", "_" ) )

            if args.optimal_r:
                reports.append( optimal_split( params, args.rmax ) )

            elif args.rmax is not None:
                reports.extend( sweep_r( params, args.rmax ) )

            else:
                for r in int_list( args.r ):
                    reports.append( estimate( params.replace( r = r ) ) )

    if args.csv:
        lines = [ ",".join( CostReport.fields ) ] + [ ",".join( rep.as_row() ) for rep in reports ]
        _output( "\n".join( lines ), args.out )

    else:
        blocks = []
        for rep in reports:
            text = rep.dump()
            if args.per_lookup:
                total, rs = dense_prep_optimal( rep.params.l, rep.params.b )
                text += "\nper_lookup_toffoli=%s\nper_lookup_r=%s" % ( CostReport._text( total ), ",".join( str( r ) for r in rs ) )

            blocks.append( text )

        _output( "\n\n".join( blocks ), args.out )

    return EXIT_OK

def cmd_pui( args ):
    actions = read_actions( args.actions ) if args.actions else {}
    req = PuiRequest( args.w, args.l, args.r, actions, mode = args.mode, extra = args.extra )

    c, leakage = build_pui( req )

    if args.out:
        write_circuit( c, args.out )

    print( "toffoli=%d" % c.cost.toffoli )
    print( "bound=%d" % pui_bound( args.w, args.l, args.r ) )
    print( "peak_ancillas=%d" % c.cost.peak_ancillas )
    print( "leakage=%d" % leakage.size )

    return EXIT_OK

def cmd_lemma( args ):
    if args.r is not None:
        check = lemma_brute_force( args.k, args.r )
        print( "k=%d r=%d S=%d bound=%s holds=%s" % ( args.k, args.r, check.S, check.bound, check.holds ) )

        return EXIT_OK if check.holds else EXIT_VERIFICATION

    ok = True
    for k in range( 1, args.k + 1 ):
        table = lemma_table( k )
        holds = bool( table.holds.all() )
        tight = int( 2 * table.S[ -1 ] ) == int( table.twice_bound[ -1 ] )
        ok = ok and holds and tight

        print( "k=%d rows=%d holds=%s tight_at_2^k=%s" % ( k, len( table.r ), holds, tight ) )

    return EXIT_OK if ok else EXIT_VERIFICATION

################################################################################
#
#    Parser
#
################################################################################

def build_parser():
    parser = argparse.ArgumentParser( prog = "SSP", description = "Sparse state preparation: isometry synthesis, verification and cost estimates." )
    parser.add_argument( "-v", "--verbose", action = "count", default = 0, help = "-v for INFO, -vv for DEBUG" )

    sub = parser.add_subparsers( dest = "command" )
    sub.required = True

    modes = [ m.replace( "_", "-" ) for m in SYNTHESIS_MODES ]

    p = sub.add_parser( "synthesize", help = "synthesize the isometry of a support" )
    p.add_argument( "state", help = "state file" )
    p.add_argument( "--mode", choices = modes, default = UNRESTRICTED )
    p.add_argument( "--out", default = None, help = "prefix of the output files" )
    p.add_argument( "--no-verify", action = "store_true", help = "skip the simulation check" )
    p.set_defaults( func = cmd_synthesize )

    p = sub.add_parser( "verify", help = "check a circuit against a support and a mapping" )
    p.add_argument( "state" )
    p.add_argument( "circuit" )
    p.add_argument( "mapping" )
    p.add_argument( "--isometry", action = "store_true", help = "the circuit maps the dense rows to the support" )
    p.add_argument( "--exhaustive", action = "store_true", help = "also check every basis input" )
    p.add_argument( "--seed", type = int, default = DEFAULT_SAMPLE_SEED )
    p.set_defaults( func = cmd_verify )

    p = sub.add_parser( "bench", help = "random supports, measured against the bound" )
    p.add_argument( "--s", required = True, help = "list or range, e.g. 16,64 or 16:256:16" )
    p.add_argument( "--n", required = True )
    p.add_argument( "--trials", type = int, default = 1 )
    p.add_argument( "--seed", type = int, default = 0 )
    p.add_argument( "--modes", default = ",".join( modes ) )
    p.add_argument( "--jobs", type = int, default = 1 )
    p.add_argument( "--no-timing", action = "store_true", help = "write 0 as wall time" )
    p.add_argument( "--out", default = None )
    p.set_defaults( func = cmd_bench )

    p = sub.add_parser( "improvement", help = "improvement factor over the linear baseline" )
    p.add_argument( "--s", required = True )
    p.add_argument( "--n", required = True )
    p.add_argument( "--out", default = None )
    p.set_defaults( func = cmd_improvement_table )

    p = sub.add_parser( "estimate", help = "closed-form cost of the pipeline" )
    p.add_argument( "--n", required = True )
    p.add_argument( "--s", required = True )
    p.add_argument( "--b", type = int, default = DEFAULT_ANGLE_BITS )
    p.add_argument( "--r", default = "0" )
    p.add_argument( "--real", action = "store_true", help = "real amplitudes" )
    p.add_argument( "--mode", choices = [ m.replace( "_", "-" ) for m in ISOMETRY_MODES ], default = UNRESTRICTED )
    p.add_argument( "--optimal-r", action = "store_true", help = "cheapest single split exponent" )
    p.add_argument( "--rmax", type = int, default = None, help = "sweep the split exponent from 0 to rmax (bounds --optimal-r)" )
    p.add_argument( "--per-lookup", action = "store_true", help = "also give the per-lookup optimal split" )
    p.add_argument( "--csv", action = "store_true" )
    p.add_argument( "--out", default = None )
    p.set_defaults( func = cmd_estimate )

    p = sub.add_parser( "pui", help = "standalone partial unary iteration" )
    p.add_argument( "--w", type = int, required = True, help = "address width" )
    p.add_argument( "--l", type = int, required = True )
    p.add_argument( "--r", type = int, required = True )
    p.add_argument( "--mode", choices = PUI_MODES, default = UNRESTRICTED )
    p.add_argument( "--actions", default = None, help = "action file" )
    p.add_argument( "--extra", action = "store_true", help = "the circuit carries the extra qubit" )
    p.add_argument( "--out", default = None )
    p.set_defaults( func = cmd_pui )

    p = sub.add_parser( "lemma", help = "check the Hamming-weight lemma" )
    p.add_argument( "--k", type = int, required = True )
    p.add_argument( "--r", type = int, default = None )
    p.set_defaults( func = cmd_lemma )

    return parser

def main( argv = None ):
    """
        Command-line entry point.

        :return: 0 on success, 1 on invalid input, 2 on a failed check, 3 on I/O errors.
        :rtype: int

        Usage:

            >>> from SSP.cli import main
            >>> main( [ "lemma", "--k", "3", "--r", "8" ] )
            k=3 r=8 S=5 bound=5 holds=True
            0
            >>> main( [ "lemma", "--k", "3", "--r", "3" ] )
            1

            >>> import io, os, tempfile
            >>> from SSP.tableau.functions import write_state_file
            >>> wd = tempfile.mkdtemp()
            >>> state = os.path.join( wd, "fig3.txt" )
            >>> write_state_file( fig3, state )
            >>> main( [ "synthesize", state ] )
            mode=unrestricted
            s=7
            n=7
            toffoli=5
            bound_eq1=15
            bound=15
            ancilla_peak=2
            batches=2
            build_toffoli=1
            fix_toffoli=0
            pui_toffoli=4
            0
            >>> sorted( os.listdir( wd ) )
            ['fig3.cost', 'fig3.fwd.qc', 'fig3.iso.qc', 'fig3.map', 'fig3.txt']
            >>> main( [ "verify", state, os.path.join( wd, "fig3.iso.qc" ), os.path.join( wd, "fig3.map" ), "--isometry", "--exhaustive" ] )
            ok: 7 rows, ... samples, exhaustive
            0
            >>> main( [ "verify", state, os.path.join( wd, "fig3.iso.qc" ), os.path.join( wd, "fig3.map" ) ] )
            2
            >>> main( [ "verify", state, os.path.join( wd, "missing.qc" ), os.path.join( wd, "fig3.map" ) ] )
            3

            >>> main( [ "estimate", "--n", "7", "--s", "7", "--mode", "malvetti", "--csv" ] )
            n,s,b,r,isometry,real_state,sign_fix,isometry_toffoli,isometry_qubits,dense_toffoli,dense_qubits,dense_exact,total_toffoli,total_qubits
            7,7,20,0,malvetti,0,isometry,14,8,16,26,8,30,26
            0

            >>> from SSP.costmodel import PipelineParams, sweep_r
            >>> sweep = os.path.join( wd, "sweep.csv" )
            >>> main( [ "estimate", "--n", "20", "--s", "1024", "--rmax", "3", "--csv", "--out", sweep ] )
            0
            >>> with io.open( sweep ) as fp:
            ...     rows = fp.read().splitlines()[ 1: ]
            >>> rows == [ ",".join( rep.as_row() ) for rep in sweep_r( PipelineParams( 20, 1024 ), 3 ) ]
            True
            >>> [ row.split( "," )[ 3 ] for row in rows ]
            ['0', '1', '2', '3']
    """
    args = build_parser().parse_args( argv )

    handler = configure( args.verbose, sys.stderr )

    try:
        return args.func( args )

    except validationError as e:
        sys.stderr.write( "error: %s\n" % e )
        return EXIT_VALIDATION

    except verificationError as e:
        sys.stderr.write( "verification failed: %s\n" % e )
        return EXIT_VERIFICATION

    except ( IOError, OSError ) as e:
        sys.stderr.write( "I/O error: %s\n" % e )
        return EXIT_IO

    finally:
        debug.logger.removeHandler( handler )
