/*
   Copyright 2026 The mwl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mwl/error.hpp"

namespace mwl {

const char* kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::VariableMismatch: return "VariableMismatch";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::FactorizationFailure: return "FactorizationFailure";
        case ErrorKind::FieldDegreeCap: return "FieldDegreeCap";
        case ErrorKind::InvalidModel: return "InvalidModel";
        case ErrorKind::SingularModel: return "SingularModel";
        case ErrorKind::ModelNotMinimal: return "ModelNotMinimal";
        case ErrorKind::UnsupportedResidue: return "UnsupportedResidue";
        case ErrorKind::UnsupportedFiberType: return "UnsupportedFiberType";
        case ErrorKind::IrreducibleFiber: return "IrreducibleFiber";
        case ErrorKind::ModelMismatch: return "ModelMismatch";
        case ErrorKind::NotInSpan: return "NotInSpan";
        case ErrorKind::CommonComponent: return "CommonComponent";
        case ErrorKind::WrongPencilShape: return "WrongPencilShape";
        case ErrorKind::Precondition: return "Precondition";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, std::string(kind_name(kind)) + ": " + what);
}

}  // namespace mwl
