/*
 * Copyright (c) 2026, The rendezvous authors
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

#ifndef RENDEZVOUS_TRACE_IO_HPP_
#define RENDEZVOUS_TRACE_IO_HPP_

#include <iosfwd>
#include <string>

#include "rendezvous/protocols.hpp"
#include "rendezvous/trace.hpp"

namespace rendezvous {

/**
 * Line-delimited JSON: a header line (protocol, engine, initial world, run
 * flags), one line per round or event, and a closing verdict line. Rationals
 * are "num/den" strings and lights are written by name.
 */
void writeTrace(std::ostream& out, const Trace& trace, const LightAlphabet& alphabet);
std::string traceToString(const Trace& trace, const LightAlphabet& alphabet);

/// Light names are resolved through `alphabet`. Throws Error on malformed input.
Trace readTrace(std::istream& in, const LightAlphabet& alphabet);

/// Protocol name from the header line, without parsing the rest.
std::string readTraceProtocol(std::istream& in);

}  // namespace rendezvous

#endif  // RENDEZVOUS_TRACE_IO_HPP_
