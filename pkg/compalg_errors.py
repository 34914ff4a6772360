# compalg_errors.py: exception hierarchy for the compalg library.
# Library code raises these; the command-line front end (compalg.py)
#   turns them into "Error: ..." messages and exit codes.

class CompAlgError(ValueError):
    exit_code = 2

# Errors meaning "the mathematics did not verify" exit with code 1.
class VerificationError(CompAlgError):
    exit_code = 1

# Step 1: scalars
class NonPrimeModulus(CompAlgError): pass
class ReducibleExtension(CompAlgError): pass
class CharThree(CompAlgError): pass
class NoOmega(CompAlgError): pass
class OmegaPresent(CompAlgError): pass
class MixedFields(CompAlgError): pass
class UnsupportedField(CompAlgError): pass
class NotInSubfield(CompAlgError): pass

class SchemaViolation(CompAlgError):
    def __init__(self, message, location=""):
        self.location = location
        if location != "":
            message = message + " (at " + location + ")"
        CompAlgError.__init__(self, message)

# Step 2: linear algebra and quadratic forms
class SingularMatrix(CompAlgError): pass
class BadArgument(CompAlgError): pass

# Step 3: algebra_core
class MixedAlgebras(CompAlgError): pass
class NoUnit(CompAlgError): pass
class NoNorm(CompAlgError): pass
class ModeUnavailable(CompAlgError): pass
class IsotropicBasePoint(CompAlgError): pass
class NotClosed(CompAlgError): pass
class SingularMultiplication(VerificationError): pass
class NotComposition(VerificationError): pass

# Step 4: Hurwitz
class DegenerateParameter(CompAlgError): pass
class ZeroParameter(CompAlgError): pass
class NotEightDimensional(CompAlgError): pass
class NoIsotropicFound(VerificationError): pass
class NotHurwitz(VerificationError): pass
class CharTwoUnsupported(CompAlgError): pass
class InfiniteFieldUnsupported(CompAlgError): pass
class IsotropicQuaternion(CompAlgError): pass
class NotQuaternionAlgebra(CompAlgError): pass

# Step 5: symmetric composition algebras
class NotOrderThree(CompAlgError): pass
class NotAutomorphism(VerificationError): pass
class NotCharThree(CompAlgError): pass
class ZeroLambda(CompAlgError): pass
class CubeScalar(CompAlgError): pass
class ClosureNotEightDimensional(VerificationError): pass
class NotSymmetricComposition(VerificationError): pass

# Step 6: triality and the Magic Square
class CharTwo(CompAlgError): pass
class WrongDimension(CompAlgError): pass
class NotSkew(CompAlgError): pass
class NotIsometry(CompAlgError): pass
class NoSolution(VerificationError): pass
class TrialityViolation(VerificationError): pass
class BadCharacteristic(CompAlgError): pass
