#!/usr/bin/python
# -*- coding: UTF-8 -*-

class sspException( Exception ):
    pass

################################################################################
#
#    Invalid input (exit code 1 on the command line)
#
################################################################################

class validationError( sspException ):
    pass

class indexOutOfRange( validationError ):
    pass

class duplicateRow( validationError ):
    pass

class invalidParameter( validationError ):
    pass

class parseError( validationError ):
    pass

class malformedGate( validationError ):
    pass

class freedAncilla( validationError ):
    pass

class invalidInterval( validationError ):
    pass

class malformedRequest( validationError ):
    pass

class notPowerOfTwo( validationError ):
    pass

class widthMismatch( validationError ):
    pass

################################################################################
#
#    The oracle disagrees with the synthesis (exit code 2 on the command line)
#
################################################################################

class verificationError( sspException ):
    pass

class andInverseMismatch( verificationError ):
    pass

class verificationFailed( verificationError ):
    pass

class synthesisError( verificationError ):
    pass
