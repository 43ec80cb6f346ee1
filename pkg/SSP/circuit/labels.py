################################################################################
#
#    Mnemonic and full name of all gate kinds.
#
################################################################################

LABEL = {
    'X':                   ( 'X',      'Pauli X' ),
    'MultiTargetCX':       ( 'CX',     'Multi-target controlled X' ),
    'Toffoli':             ( 'TOF',    'Toffoli with signed controls' ),
    'Swap':                ( 'SWAP',   'Swap of two qubits' ),
    'And':                 ( 'AND',    'Logical AND onto a fresh ancilla' ),
    'AndInverse':          ( 'ANDINV', 'Measurement-based AND uncomputation' ),
    'ControlledPhaseFlip': ( 'CPF',    'Controlled phase flip' )
}

MNEMONIC = dict( ( mnemonic, kind ) for kind, ( mnemonic, _ ) in LABEL.items() )

################################################################################
#
#    Toffoli cost per gate kind: one Toffoli per control beyond the number a
#    kind takes at no Toffoli cost. A k-controlled TOF is counted as its AND
#    ladder (k - 1); a phase flip is Clifford up to two controls (CZ). Every
#    other kind is Clifford.
#
################################################################################

FREE_CONTROLS = {
    'Toffoli':             1,
    'And':                 1,
    'ControlledPhaseFlip': 2
}

def toffoli_cost( kind, controls ):
    if kind not in FREE_CONTROLS:
        return 0

    return max( 0, controls - FREE_CONTROLS[ kind ] )

INVERSE = {
    'And':        'AndInverse',
    'AndInverse': 'And'
}
