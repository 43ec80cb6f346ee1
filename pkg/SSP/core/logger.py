#!/usr/bin/python
# -*- coding: UTF-8 -*-

import logging

################################################################################
#
#    Leveled logger
#
################################################################################

class levelAdapter( logging.LoggerAdapter ):
    """
        Logger adapter indenting the messages by nesting level, four spaces per
        level. The level is passed as second positional argument:
        
            >>> from SSP.core.logger import debug
            >>> debug.debug( "Building the batch", 1 )
    """
    def process( self, msg, kwargs ):
        depth = kwargs.pop( "depth", 0 )
        return "    " * depth + str( msg ), kwargs
    
    def debug( self, msg, depth = 0 ):
        self.log( logging.DEBUG, msg, depth = depth )
    
    def info( self, msg, depth = 0 ):
        self.log( logging.INFO, msg, depth = depth )
    
    def warning( self, msg, depth = 0 ):
        self.log( logging.WARNING, msg, depth = depth )

_logger = logging.getLogger( "SSP" )
_logger.addHandler( logging.NullHandler() )

debug = levelAdapter( _logger, {} )

def configure( verbosity = 0, stream = None ):
    """
        Attach a stream handler to the "SSP" logger. The verbosity maps 0, 1
        and 2 (or more) to WARNING, INFO and DEBUG.
    """
    level = [ logging.WARNING, logging.INFO, logging.DEBUG ][ min( max( verbosity, 0 ), 2 ) ]
    
    handler = logging.StreamHandler( stream )
    handler.setFormatter( logging.Formatter( "%(levelname)s %(message)s" ) )
    
    _logger.addHandler( handler )
    _logger.setLevel( level )
    
    return handler
