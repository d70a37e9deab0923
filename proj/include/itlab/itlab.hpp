#pragma once

#include "itlab/alphabet.hpp"
#include "itlab/arithmetic.hpp"
#include "itlab/barnard.hpp"
#include "itlab/bitstream.hpp"
#include "itlab/channel.hpp"
#include "itlab/channel_code.hpp"
#include "itlab/coded_stream.hpp"
#include "itlab/convolutional.hpp"
#include "itlab/corpus.hpp"
#include "itlab/errors.hpp"
#include "itlab/gf16.hpp"
#include "itlab/huffman.hpp"
#include "itlab/kahan.hpp"
#include "itlab/ngram.hpp"
#include "itlab/pipeline.hpp"
#include "itlab/reed_solomon.hpp"
#include "itlab/rng.hpp"
#include "itlab/serial.hpp"
#include "itlab/utf8.hpp"
