/*
 * Copyright 2026 The ivg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IVG_ERROR_HPP
#define IVG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ivg {

enum class ErrorKind {
    MalformedDocument,
    DeadEndVertex,
    UnknownVertexReference,
    LambdaOutOfRange,
    EmptyInterval,
    EmptyObjective,
    PriorityOutOfRange,
    NonpositiveWidth,
    SingletonNotSupported,
    NoFiniteEndpoint,
    IncompatibleReduction,
    UnsupportedObjective,
    BadParameters,
    TooLarge,
};

const char* to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported as an ivg::Error.
/// Internal invariant violations (solver bugs) throw std::logic_error instead.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ivg

#endif
