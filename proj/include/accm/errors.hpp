/*
Copyright 2026 the accm authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef ACCM_ERRORS_HPP
#define ACCM_ERRORS_HPP

#include <stdexcept>

namespace accm {

// Base class for archive and stream failures. API misuse (bad sizes,
// out-of-range configuration) throws std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Header bytes violate the format invariants (bad sizes, duplicate lags, ...).
class MalformedHeader : public Error {
public:
    using Error::Error;
};

// Magic or version byte does not identify a readable archive.
class UnsupportedFormat : public Error {
public:
    using Error::Error;
};

// The coder needed payload bytes past the end of the stream.
class StreamExhausted : public Error {
public:
    using Error::Error;
};

} // namespace accm

#endif
